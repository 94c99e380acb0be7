//! Dense bit rows and square bit matrices.

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// Fixed-width set of small integers packed into machine words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn new(len: usize) -> Self {
        BitRow {
            words: vec![0; words_for(len)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut row = BitRow::new(len);
        for i in 0..len {
            row.insert(i);
        }
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn union_with(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset(&self, other: &BitRow) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Equality restricted to the lowest `prefix` bits.
    pub fn eq_prefix(&self, other: &BitRow, prefix: usize) -> bool {
        let full = prefix / WORD;
        if self.words[..full] != other.words[..full] {
            return false;
        }
        let rest = prefix % WORD;
        if rest == 0 {
            return true;
        }
        let mask = (1u64 << rest) - 1;
        (self.words[full] ^ other.words[full]) & mask == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * WORD + bit)
            })
        })
    }
}

/// Square boolean matrix stored row-major as bit rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<BitRow>,
}

impl BitMatrix {
    pub fn new(size: usize) -> Self {
        BitMatrix {
            rows: vec![BitRow::new(size); size],
        }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].contains(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize) {
        self.rows[r].insert(c);
    }

    pub fn row(&self, r: usize) -> &BitRow {
        &self.rows[r]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut BitRow {
        &mut self.rows[r]
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.size());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.iter() {
                t.set(c, r);
            }
        }
        t
    }
}
