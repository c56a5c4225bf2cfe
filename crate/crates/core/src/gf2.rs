//! Row reduction over the two-element field on bit-packed rows.
//!
//! Columns are numbered from 0 and pivots are chosen at the lowest set
//! column, so callers that index columns in canonical monomial order get
//! deterministic pivoting.

/// A fixed-width vector over the two-element field, 64 entries per word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Lowest set column at or after `from`.
    pub fn first_one_from(&self, from: usize) -> Option<usize> {
        if from >= self.len {
            return None;
        }
        let mut wi = from / 64;
        let mut word = self.words[wi] & (!0u64 << (from % 64));
        loop {
            if word != 0 {
                return Some(wi * 64 + word.trailing_zeros() as usize);
            }
            wi += 1;
            if wi == self.words.len() {
                return None;
            }
            word = self.words[wi];
        }
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        let mut next = self.first_one_from(0);
        std::iter::from_fn(move || {
            let cur = next?;
            next = self.first_one_from(cur + 1);
            Some(cur)
        })
    }
}

/// Incrementally built echelon basis of a row space.
///
/// Every stored row carries a `combo` vector recording which input rows
/// were summed to produce it, so membership answers come with a witness.
#[derive(Debug, Clone)]
pub struct Echelon {
    width: usize,
    inputs: usize,
    // pivot column -> index into `rows`
    pivot_of: Vec<Option<usize>>,
    rows: Vec<(BitRow, BitRow)>,
}

/// Result of reducing a vector against the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub residue: BitRow,
    /// Input rows whose sum equals the reduced-away part of the vector.
    pub combo: BitRow,
}

impl Echelon {
    /// `width` columns; `inputs` is the number of rows that will be offered.
    pub fn new(width: usize, inputs: usize) -> Self {
        Echelon { width, inputs, pivot_of: vec![None; width], rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn reduce(&self, v: &BitRow) -> Reduction {
        let mut residue = v.clone();
        let mut combo = BitRow::zeros(self.inputs);
        let mut col = 0;
        while let Some(c) = residue.first_one_from(col) {
            match self.pivot_of[c] {
                Some(r) => {
                    let (row, row_combo) = &self.rows[r];
                    residue.xor_assign(row);
                    combo.xor_assign(row_combo);
                }
                None => col = c + 1,
            }
        }
        Reduction { residue, combo }
    }

    /// Offers input row number `tag`. Returns true when it enlarged the span.
    pub fn insert(&mut self, tag: usize, row: BitRow) -> bool {
        assert_eq!(row.len(), self.width);
        let Reduction { residue, mut combo } = self.reduce(&row);
        combo.flip(tag);
        match residue.first_one_from(0) {
            Some(c) => {
                self.pivot_of[c] = Some(self.rows.len());
                self.rows.push((residue, combo));
                true
            }
            None => false,
        }
    }
}
