use std::cmp::Ordering;
use std::fmt;

/// A product of generators, stored as the ascending list of generator
/// indices with repetition (`w_2^2 w_3` is `[2, 2, 3]`).
///
/// Ordering is graded: total degree first, then lexicographic on the
/// sorted index list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn generator(index: u32) -> Self {
        Monomial { factors: vec![index], degree: index }
    }

    /// Builds a monomial from (index, exponent) pairs; zero exponents are skipped.
    pub fn from_exponents<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut factors = Vec::new();
        for (i, e) in pairs {
            factors.extend(std::iter::repeat(i).take(e as usize));
        }
        Self::from_factors(factors)
    }

    pub fn from_factors(mut factors: Vec<u32>) -> Self {
        factors.sort_unstable();
        let degree = factors.iter().sum();
        Monomial { factors, degree }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Generator indices in ascending order, with repetition.
    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    /// (index, exponent) pairs in ascending index order.
    pub fn exponents(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &f in &self.factors {
            match out.last_mut() {
                Some((i, e)) if *i == f => *e += 1,
                _ => out.push((f, 1)),
            }
        }
        out
    }

    pub fn exponent_of(&self, index: u32) -> u32 {
        self.factors.iter().filter(|&&f| f == index).count() as u32
    }

    pub fn max_index(&self) -> Option<u32> {
        self.factors.last().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut factors = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] <= b[j] {
                factors.push(a[i]);
                i += 1;
            } else {
                factors.push(b[j]);
                j += 1;
            }
        }
        factors.extend_from_slice(&a[i..]);
        factors.extend_from_slice(&b[j..]);
        Monomial { factors, degree: self.degree + other.degree }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (n, (i, e)) in self.exponents().into_iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "w{i}")?;
            } else {
                write!(f, "w{i}^{e}")?;
            }
        }
        Ok(())
    }
}
