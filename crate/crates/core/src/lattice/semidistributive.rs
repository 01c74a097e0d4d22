use super::Lattice;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdLaw {
    /// `x∨y = x∨z` implies `x∨(y∧z) = x∨y`
    Join,
    /// `x∧y = x∧z` implies `x∧(y∨z) = x∧y`
    Meet,
}

/// A triple violating one of the semidistributive laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SdWitness {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub law: SdLaw,
}

impl Lattice {
    pub fn violates(&self, law: SdLaw, x: usize, y: usize, z: usize) -> bool {
        match law {
            SdLaw::Join => {
                let xy = self.join(x, y);
                xy == self.join(x, z) && self.join(x, self.meet(y, z)) != xy
            }
            SdLaw::Meet => {
                let xy = self.meet(x, y);
                xy == self.meet(x, z) && self.meet(x, self.join(y, z)) != xy
            }
        }
    }

    pub fn law_witness(&self, law: SdLaw) -> Option<SdWitness> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in y + 1..n {
                    if self.violates(law, x, y, z) {
                        return Some(SdWitness { x, y, z, law });
                    }
                }
            }
        }
        None
    }

    /// First violating triple found, checking the join law before the meet law.
    pub fn semidistributivity_witness(&self) -> Option<SdWitness> {
        self.law_witness(SdLaw::Join).or_else(|| self.law_witness(SdLaw::Meet))
    }

    pub fn is_join_semidistributive(&self) -> bool {
        self.law_witness(SdLaw::Join).is_none()
    }

    pub fn is_meet_semidistributive(&self) -> bool {
        self.law_witness(SdLaw::Meet).is_none()
    }

    pub fn is_semidistributive(&self) -> bool {
        self.semidistributivity_witness().is_none()
    }
}
