use core::fmt;

/// A set of small indices (`0..128`) packed into a `u128`.
///
/// Used for subcategories (sets of catalog indices) and as the element
/// type when building lattices ordered by inclusion.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits(pub u128);

pub const MAX_BITS: usize = 128;

impl Bits {
    pub const EMPTY: Bits = Bits(0);

    pub fn full(n: usize) -> Bits {
        assert!(n <= MAX_BITS);
        if n == MAX_BITS {
            Bits(u128::MAX)
        } else {
            Bits((1u128 << n) - 1)
        }
    }

    pub fn single(i: usize) -> Bits {
        Bits(1u128 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Bits {
        let mut b = Bits::EMPTY;
        for i in it {
            b.insert(i);
        }
        b
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_BITS && (self.0 >> i) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < MAX_BITS, "index {i} does not fit in Bits");
        self.0 |= 1u128 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn with(self, i: usize) -> Bits {
        let mut b = self;
        b.insert(i);
        b
    }

    #[inline]
    pub fn union(self, o: Bits) -> Bits {
        Bits(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: Bits) -> Bits {
        Bits(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: Bits) -> Bits {
        Bits(self.0 & !o.0)
    }

    #[inline]
    pub fn is_subset(self, o: Bits) -> bool {
        self.0 & !o.0 == 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> BitsIter {
        BitsIter(self.0)
    }
}

pub struct BitsIter(u128);

impl Iterator for BitsIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl IntoIterator for Bits {
    type Item = usize;
    type IntoIter = BitsIter;
    fn into_iter(self) -> BitsIter {
        self.iter()
    }
}

impl FromIterator<usize> for Bits {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Bits {
        Bits::from_indices(it)
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
