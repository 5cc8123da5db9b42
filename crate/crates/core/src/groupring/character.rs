//! Characters of G_I with values in Z[zeta_e], e the exponent of G_I.
//!
//! The cyclic decomposition is found by brute force: repeatedly take an element of
//! maximal order in the quotient by the subgroup found so far, then search its coset
//! for a lift of the same order. Because the first pick has maximal order in G, every
//! partial subgroup is a direct summand and such a lift always exists.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::cyclo::CycloInt;
use super::element::GroupRingElem;
use super::unit_group::UnitGroup;
use crate::error::{Error, Result};

/// chi(g) = zeta_e^exps[g].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    /// Exponents a_i: chi(g_i) = zeta_{n_i}^{a_i} on the cyclic generators.
    pub label: Vec<u32>,
    pub exps: Vec<u32>,
}

impl Character {
    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&k| k == 0)
    }
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    exponent: u32,
    /// (unit position, order) of each cyclic factor.
    generators: Vec<(usize, u32)>,
    characters: Vec<Character>,
}

/// Closure of `members` under multiplication by `g` (members must form a subgroup).
fn extend_subgroup(group: &UnitGroup, members: &[bool], g: usize) -> Vec<bool> {
    let mut out = members.to_vec();
    let mut frontier: Vec<usize> = (0..members.len()).filter(|&h| members[h]).collect();
    while let Some(h) = frontier.pop() {
        let next = group.mul(h, g);
        if !out[next] {
            out[next] = true;
            frontier.push(next);
        }
    }
    out
}

/// Smallest k >= 1 with g^k in the subgroup.
fn coset_order(group: &UnitGroup, members: &[bool], g: usize) -> u32 {
    let mut x = g;
    let mut k = 1;
    while !members[x] {
        x = group.mul(x, g);
        k += 1;
    }
    k
}

impl CharacterTable {
    pub fn new(group: &UnitGroup) -> Result<Self> {
        let n = group.order();
        let mut members = vec![false; n];
        members[group.identity()] = true;
        let mut generators: Vec<(usize, u32)> = Vec::new();
        let mut size = 1usize;
        while size < n {
            let (best, m) = (0..n)
                .filter(|&g| !members[g])
                .map(|g| (g, coset_order(group, &members, g)))
                .max_by_key(|&(g, k)| (k, std::cmp::Reverse(g)))
                .expect("proper subgroup has a complement element");
            // search the coset best*H for an element of order exactly m
            let lift = (0..n)
                .filter(|&h| members[h])
                .map(|h| group.mul(best, h))
                .find(|&x| group.element_order(x) == m as u64)
                .ok_or_else(|| Error::InvalidArgument("no order-preserving lift in coset".into()))?;
            members = extend_subgroup(group, &members, lift);
            size *= m as usize;
            generators.push((lift, m));
        }
        debug_assert_eq!(members.iter().filter(|&&b| b).count(), n);
        let exponent = generators.iter().fold(1u32, |acc, &(_, m)| acc.lcm(&m));

        // coordinates: every element is prod g_i^{b_i} uniquely
        let mut coords = vec![Vec::new(); n];
        let mut stack = vec![(group.identity(), Vec::<u32>::new())];
        while let Some((x, c)) = stack.pop() {
            if c.len() == generators.len() {
                coords[x] = c;
                continue;
            }
            let (g, m) = generators[c.len()];
            let mut y = x;
            for b in 0..m {
                let mut cc = c.clone();
                cc.push(b);
                stack.push((y, cc));
                y = group.mul(y, g);
            }
        }

        let labels = cartesian(&generators.iter().map(|&(_, m)| m).collect::<Vec<_>>());
        let characters = labels
            .into_iter()
            .map(|label| {
                let exps = coords
                    .iter()
                    .map(|b| {
                        let mut k = 0u64;
                        for (i, &(_, m)) in generators.iter().enumerate() {
                            k += label[i] as u64 * b[i] as u64 * (exponent / m) as u64;
                        }
                        (k % exponent as u64) as u32
                    })
                    .collect();
                Character { label, exps }
            })
            .collect();
        Ok(CharacterTable { exponent, generators, characters })
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn generators(&self) -> &[(usize, u32)] {
        &self.generators
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn value(&self, chi: &Character, g: usize) -> CycloInt {
        CycloInt::root_of_unity(self.exponent, chi.exps[g])
    }

    /// Linear extension of chi to Z[G]; accumulated in Z[x]/(x^e - 1) then reduced.
    pub fn apply(&self, chi: &Character, a: &GroupRingElem) -> CycloInt {
        let mut acc = vec![BigInt::zero(); self.exponent as usize];
        for (g, c) in a.support() {
            acc[chi.exps[g] as usize] += c;
        }
        CycloInt::from_cyclic_sum(self.exponent, acc)
    }

    /// sum over g of chi(g) * conj(psi(g)).
    pub fn inner_product(&self, chi: &Character, psi: &Character) -> CycloInt {
        let e = self.exponent;
        let mut acc = vec![BigInt::zero(); e as usize];
        for (a, b) in chi.exps.iter().zip(&psi.exps) {
            acc[((a + e - b) % e) as usize] += 1;
        }
        CycloInt::from_cyclic_sum(e, acc)
    }
}

fn cartesian(orders: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &m in orders {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..m).map(move |a| {
                    let mut v = prefix.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn characters(group: &UnitGroup) -> Result<CharacterTable> {
    CharacterTable::new(group)
}

pub fn char_apply(table: &CharacterTable, chi: &Character, a: &GroupRingElem) -> Result<CycloInt> {
    if chi.exps.len() != a.group().order() {
        return Err(Error::GroupMismatch);
    }
    Ok(table.apply(chi, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::{FieldCtx, Poly};

    #[test]
    fn cyclic_of_order_three() {
        let f = FieldCtx::new(2, 1).unwrap();
        let g = UnitGroup::new(&f, &Poly::new(vec![1, 1, 1])).unwrap();
        let table = characters(&g).unwrap();
        assert_eq!(table.exponent(), 3);
        assert_eq!(table.characters().len(), 3);
        assert!(table.characters()[0].is_trivial());
        let mut value_sets: Vec<Vec<u32>> = table
            .characters()
            .iter()
            .map(|c| {
                let mut v = c.exps.clone();
                v.sort();
                v
            })
            .collect();
        value_sets.sort();
        assert_eq!(value_sets, vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 1, 2]]);
    }

    #[test]
    fn trivial_group_has_one_character() {
        let f = FieldCtx::new(2, 1).unwrap();
        let g = UnitGroup::new(&f, &Poly::new(vec![0, 1, 1])).unwrap();
        let table = characters(&g).unwrap();
        assert_eq!(table.characters().len(), 1);
        assert_eq!(table.exponent(), 1);
    }

    #[test]
    fn apply_norm_and_trivial() {
        let f = FieldCtx::new(3, 1).unwrap();
        let g = UnitGroup::new(&f, &Poly::new(vec![1, 0, 0, 1])).unwrap(); // (t+1)^3
        let table = characters(&g).unwrap();
        let n = GroupRingElem::norm(&g);
        let a = GroupRingElem::from_coeffs(&g, (0..g.order()).map(|i| BigInt::from(i as i64 - 3)).collect()).unwrap();
        for chi in table.characters() {
            let v = char_apply(&table, chi, &n).unwrap();
            if chi.is_trivial() {
                assert_eq!(v.as_integer(), Some(BigInt::from(g.order())));
                assert_eq!(table.apply(chi, &a).as_integer(), Some(a.augmentation()));
            } else {
                assert!(v.is_zero());
            }
        }
    }
}
