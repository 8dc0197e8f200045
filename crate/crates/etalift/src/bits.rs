//! Fixed-width bitset used by the degree-set machinery.

const WBITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct BitVec64 {
    len: usize,
    words: Vec<u64>,
}

impl BitVec64 {
    pub fn new(len: usize) -> Self {
        BitVec64 {
            len,
            words: vec![0; len.div_ceil(WBITS)],
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WBITS] |= 1u64 << (i % WBITS);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WBITS] >> (i % WBITS) & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `self |= other << shift`; negative shifts move right. Bits shifted
    /// outside `[0, self.len)` are dropped.
    pub fn or_shifted(&mut self, other: &BitVec64, shift: i64) {
        for w in 0..self.words.len() {
            let mut acc = 0u64;
            // Bit b of self-word w is other bit (w*64 + b) - shift.
            let lo = w as i64 * WBITS as i64 - shift;
            let (src_word, off) = (lo.div_euclid(WBITS as i64), lo.rem_euclid(WBITS as i64));
            if let Some(&x) = usize::try_from(src_word).ok().and_then(|s| other.words.get(s)) {
                acc |= x >> off;
            }
            if off != 0 {
                if let Some(&x) = usize::try_from(src_word + 1)
                    .ok()
                    .and_then(|s| other.words.get(s))
                {
                    acc |= x << (WBITS as i64 - off);
                }
            }
            self.words[w] |= acc;
        }
        self.mask_tail();
    }

    fn mask_tail(&mut self) {
        let used = self.len % WBITS;
        if used != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(w * WBITS + b)
                }
            })
        })
    }

    /// Bit `i` maps to bit `len - 1 - i`.
    pub fn reversed(&self) -> BitVec64 {
        let mut out = BitVec64::new(self.len);
        for i in self.ones() {
            out.set(self.len - 1 - i);
        }
        out
    }

    pub fn is_subset(&self, other: &BitVec64) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }
}
