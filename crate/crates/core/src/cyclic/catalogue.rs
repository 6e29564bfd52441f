use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Full automorphism group of a hyperelliptic curve with cyclic or `A4`
/// reduced automorphism group.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GroupTag {
    /// `Z2 x Zn`
    Z2xZn,
    /// `Z_2n`
    Z2n,
    /// `Z2 x A4`
    Z2xA4,
    /// `SL2(3)`
    Sl2F3,
}

impl GroupTag {
    pub fn name(self) -> &'static str {
        match self {
            GroupTag::Z2xZn => "Z2xZn",
            GroupTag::Z2n => "Z2n",
            GroupTag::Z2xA4 => "Z2xA4",
            GroupTag::Sl2F3 => "SL2(3)",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [
            GroupTag::Z2xZn,
            GroupTag::Z2n,
            GroupTag::Z2xA4,
            GroupTag::Sl2F3,
        ]
        .into_iter()
        .find(|g| g.name() == s)
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `count` disjoint cycles of length `order`, written `order^count`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CycleType {
    pub order: u32,
    pub count: u32,
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.order, self.count)
    }
}

/// One row of the classification of cyclic and `A4` reduced groups.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalogueRow {
    pub row: u32,
    pub group: GroupTag,
    /// Dimension of the locus.
    pub delta: u32,
    pub signature: Vec<CycleType>,
    /// Number of involutions in the full group.
    pub involutions: u32,
}

fn ct(order: u32, count: u32) -> CycleType {
    CycleType { order, count }
}

fn violation(column: &str, detail: alloc::string::String) -> Error {
    Error::Constraint {
        constraint: format!("{column}: {detail}"),
    }
}

/// Dimension, signature and involution count for a group and genus.
///
/// `n` is the order of the cyclic reduced group and is ignored for the
/// `A4` rows. `Z_2n` covers two rows, told apart by whether `n` divides
/// `2g + 1` or `2g`.
pub fn group_catalogue(group: GroupTag, n: u32, g: u32) -> Result<CatalogueRow> {
    if g < 2 {
        return Err(violation("genus", format!("g = {g} < 2")));
    }
    let (row, delta, lead, involutions) = match group {
        GroupTag::Z2xZn => {
            if n < 2 || !(2 * g + 2).is_multiple_of(n) {
                return Err(violation(
                    "delta",
                    format!("n = {n} does not divide 2g+2 = {}", 2 * g + 2),
                ));
            }
            (1, (2 * g + 2) / n - 1, [ct(n, 2), ct(n, 2)].to_vec(), 3)
        }
        GroupTag::Z2n if n >= 2 && (2 * g + 1).is_multiple_of(n) => {
            (2, (2 * g + 1) / n - 1, [ct(n, 2), ct(2 * n, 1)].to_vec(), 1)
        }
        GroupTag::Z2n if n >= 2 && (2 * g).is_multiple_of(n) => {
            (3, 2 * g / n - 1, [ct(2 * n, 1), ct(2 * n, 1)].to_vec(), 1)
        }
        GroupTag::Z2n => {
            return Err(violation(
                "delta",
                format!("n = {n} divides neither 2g+1 nor 2g (g = {g})"),
            ));
        }
        GroupTag::Z2xA4 => match g % 6 {
            5 => (4, (g + 1) / 6, [ct(3, 8), ct(3, 8)].to_vec(), 7),
            1 => (5, (g - 1) / 6, [ct(3, 8), ct(6, 4)].to_vec(), 7),
            3 => (6, (g - 3) / 6, [ct(6, 4), ct(6, 4)].to_vec(), 7),
            _ => {
                return Err(violation(
                    "G",
                    format!("Z2xA4 needs g = -1, 1, 3 mod 6 (g = {g})"),
                ))
            }
        },
        GroupTag::Sl2F3 => match g % 6 {
            2 => (7, (g - 2) / 6, [ct(4, 6), ct(3, 8), ct(3, 8)].to_vec(), 1),
            4 => (8, (g - 4) / 6, [ct(4, 6), ct(3, 8), ct(6, 4)].to_vec(), 1),
            0 => (9, (g - 6) / 6, [ct(4, 6), ct(6, 4), ct(6, 4)].to_vec(), 1),
            _ => {
                return Err(violation(
                    "G",
                    format!("SL2(3) needs g = 2, 4, 0 mod 6 (g = {g})"),
                ))
            }
        },
    };
    let excluded: &[u32] = match row {
        1 | 3 => &[0, 1],
        6 | 7 | 9 => &[0],
        _ => &[],
    };
    if excluded.contains(&delta) {
        return Err(violation(
            "delta !=",
            format!("row {row} excludes delta = {delta}"),
        ));
    }
    // delta + 3 branch points in all
    let trailing = delta + 3 - lead.len() as u32;
    let tail = match group {
        GroupTag::Z2xZn | GroupTag::Z2n => ct(2, n),
        GroupTag::Z2xA4 | GroupTag::Sl2F3 => ct(2, 12),
    };
    let mut signature = lead;
    signature.extend(core::iter::repeat_n(tail, trailing as usize));
    Ok(CatalogueRow {
        row,
        group,
        delta,
        signature,
        involutions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_rows() {
        let r = group_catalogue(GroupTag::Z2xZn, 2, 3).unwrap();
        assert_eq!((r.row, r.delta, r.involutions), (1, 3, 3));
        assert_eq!(
            r.signature,
            [ct(2, 2), ct(2, 2), ct(2, 2), ct(2, 2), ct(2, 2), ct(2, 2)]
        );

        let r = group_catalogue(GroupTag::Z2xA4, 0, 5).unwrap();
        assert_eq!((r.row, r.delta, r.involutions), (4, 1, 7));
        assert_eq!(r.signature, [ct(3, 8), ct(3, 8), ct(2, 12), ct(2, 12)]);

        let r = group_catalogue(GroupTag::Sl2F3, 0, 8).unwrap();
        assert_eq!((r.row, r.delta, r.involutions), (7, 1, 1));
        assert_eq!(r.signature, [ct(4, 6), ct(3, 8), ct(3, 8), ct(2, 12)]);
    }

    #[test]
    fn cyclic_odd_and_marked() {
        let r = group_catalogue(GroupTag::Z2n, 5, 2).unwrap();
        assert_eq!((r.row, r.delta), (2, 0));
        assert_eq!(r.signature, [ct(5, 2), ct(10, 1), ct(2, 5)]);
        let r = group_catalogue(GroupTag::Z2n, 2, 4).unwrap();
        assert_eq!((r.row, r.delta), (3, 3));
    }

    #[test]
    fn exclusions() {
        // delta = 1 for n = 5, g = 4 in row 1
        assert!(group_catalogue(GroupTag::Z2xZn, 5, 4).is_err());
        assert!(group_catalogue(GroupTag::Z2xA4, 0, 3).is_err());
        assert!(group_catalogue(GroupTag::Sl2F3, 0, 2).is_err());
        assert!(group_catalogue(GroupTag::Sl2F3, 0, 6).is_err());
        assert!(group_catalogue(GroupTag::Z2xA4, 0, 8).is_err());
        assert!(group_catalogue(GroupTag::Z2n, 4, 5).is_err());
    }
}
