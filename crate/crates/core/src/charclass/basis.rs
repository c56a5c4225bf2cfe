use super::{CharClassError, Monomial, SWRing};

/// All monomials of total degree exactly `d`, in canonical order.
pub fn basis_of_degree(ring: SWRing, d: u32) -> Result<Vec<Monomial>, CharClassError> {
    let max = ring.bounded_max()?;
    let mut out = Vec::new();
    let mut stack = Vec::new();
    extend(ring.min_gen(), max, d, &mut stack, &mut out);
    out.sort_unstable();
    Ok(out)
}

// Nondecreasing part sequences summing to `rest`, smallest part first.
fn extend(lo: u32, hi: u32, rest: u32, stack: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if rest == 0 {
        out.push(Monomial::from_factors(stack.clone()));
        return;
    }
    for part in lo..=hi.min(rest) {
        stack.push(part);
        extend(part, hi, rest - part, stack, out);
        stack.pop();
    }
}

/// Number of monomials of degree `d`, without materializing them.
pub fn basis_size(ring: SWRing, d: u32) -> Result<u64, CharClassError> {
    let max = ring.bounded_max()?;
    let d = d as usize;
    let mut counts = vec![0u64; d + 1];
    counts[0] = 1;
    for part in ring.min_gen() as usize..=(max as usize).min(d) {
        for n in part..=d {
            counts[n] += counts[n - part];
        }
    }
    Ok(counts[d])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_slices() {
        let r = SWRing::oriented(4).unwrap();
        let b = basis_of_degree(r, 4).unwrap();
        let names: Vec<String> = b.iter().map(ToString::to_string).collect();
        assert_eq!(names, ["w2^2", "w4"]);
        assert_eq!(basis_of_degree(r, 0).unwrap(), vec![Monomial::one()]);
        assert!(basis_of_degree(r, 1).unwrap().is_empty());
    }

    #[test]
    fn unbounded_is_rejected() {
        assert!(basis_of_degree(SWRing::oriented_unbounded(), 3).is_err());
        assert!(basis_size(SWRing::unoriented_unbounded(), 3).is_err());
    }

    #[test]
    fn deterministic_and_sorted() {
        let r = SWRing::unoriented(7).unwrap();
        let a = basis_of_degree(r, 9).unwrap();
        assert_eq!(a, basis_of_degree(r, 9).unwrap());
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(a.len() as u64, basis_size(r, 9).unwrap());
    }
}
