//! Finite groups as dense multiplication tables.
//!
//! Elements are indices `0..order` with the identity fixed at index 0.
//! `table[a][b]` is the product `a·b`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Default cap for subgroup enumeration and the theorem checkers.
pub const DEFAULT_GROUP_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    pub name: String,
}

/// Canonical (sorted, duplicate-free) set of element indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElementSet {
    pub members: Vec<usize>,
    pub group_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgroup {
    pub elements: ElementSet,
    pub parent_order: usize,
}

impl ElementSet {
    pub fn new(members: impl IntoIterator<Item = usize>, group_order: usize) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&m) = members.iter().find(|&&m| m >= group_order) {
            return Err(Error::ElementOutOfRange {
                index: m,
                order: group_order,
            });
        }
        Ok(ElementSet {
            members,
            group_order,
        })
    }

    pub fn empty(group_order: usize) -> Self {
        ElementSet {
            members: Vec::new(),
            group_order,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elements.contains(e)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_proper(&self) -> bool {
        self.order() < self.parent_order
    }
}

impl Group {
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Builds a group from a full table, checking every invariant.
    pub fn from_table(table: Vec<Vec<usize>>, name: impl Into<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidTable(format!(
                    "row {a} contains out-of-range index {v}"
                )));
            }
        }
        // Latin square: each row and column is a permutation.
        for a in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for b in 0..n {
                if seen_row[table[a][b]] {
                    return Err(Error::InvalidTable(format!(
                        "row {a} repeats index {}",
                        table[a][b]
                    )));
                }
                seen_row[table[a][b]] = true;
                if seen_col[table[b][a]] {
                    return Err(Error::InvalidTable(format!(
                        "column {a} repeats index {}",
                        table[b][a]
                    )));
                }
                seen_col[table[b][a]] = true;
            }
        }
        // Identity at index 0.
        for (a, &row0) in table[0].iter().enumerate() {
            if row0 != a || table[a][0] != a {
                return Err(Error::InvalidTable(format!(
                    "index 0 is not an identity at element {a}"
                )));
            }
        }
        // Associativity, full scan.
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        // Inverses.
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == 0 && table[b][a] == 0) {
                Some(b) => inverse[a] = b,
                None => return Err(Error::InvalidTable(format!("element {a} has no inverse"))),
            }
        }
        Ok(Group {
            order: n,
            table,
            inverse,
            name: name.into(),
        })
    }

    /// ℤₙ under addition mod n.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Group::from_table(table, format!("Z{n}"))
    }

    /// Dihedral group of order 2n: indices 0..n are rotations r^i,
    /// n..2n are reflections s·r^i.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        let order = 2 * n;
        let mut table = vec![vec![0usize; order]; order];
        let sub = |a: usize, b: usize| (a + n - b % n) % n;
        for i in 0..n {
            for j in 0..n {
                // r^i · r^j = r^(i+j)
                table[i][j] = (i + j) % n;
                // r^i · s r^j = s r^(j-i)
                table[i][n + j] = n + sub(j, i);
                // s r^i · r^j = s r^(i+j)
                table[n + i][j] = n + (i + j) % n;
                // s r^i · s r^j = r^(j-i)
                table[n + i][n + j] = sub(j, i);
            }
        }
        Group::from_table(table, format!("D{n}"))
    }

    /// Symmetric group Sₙ for n ≤ 4 (order cap 24). Permutations are
    /// indexed in lexicographic order, so the identity gets index 0.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        if n > 4 {
            return Err(Error::Capacity {
                what: "symmetric group order",
                size: (1..=n).product(),
                cap: DEFAULT_GROUP_CAP,
            });
        }
        let perms = all_permutations(n);
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let order = perms.len();
        let mut table = vec![vec![0usize; order]; order];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                // (a·b)(x) = a(b(x))
                let prod: Vec<usize> = (0..n).map(|x| pa[pb[x]]).collect();
                table[a][b] = index_of(&prod);
            }
        }
        Group::from_table(table, format!("S{n}"))
    }

    pub fn direct_product(g1: &Group, g2: &Group) -> Result<Self> {
        let order = g1.order * g2.order;
        let idx = |a: usize, b: usize| a * g2.order + b;
        let mut table = vec![vec![0usize; order]; order];
        for a1 in 0..g1.order {
            for b1 in 0..g2.order {
                for a2 in 0..g1.order {
                    for b2 in 0..g2.order {
                        table[idx(a1, b1)][idx(a2, b2)] = idx(g1.mul(a1, a2), g2.mul(b1, b2));
                    }
                }
            }
        }
        Group::from_table(table, format!("{} x {}", g1.name, g2.name))
    }

    /// Parses a group table file: first line `order n`, then n rows.
    pub fn parse_table_file(content: &str) -> Result<Self> {
        let mut lines = content.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidTable("empty table file".into()))?;
        let n: usize = header
            .trim()
            .strip_prefix("order")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| Error::InvalidTable("first line must be `order n`".into()))?;
        let mut table = Vec::with_capacity(n);
        for _ in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::InvalidTable("too few table rows".into()))?;
            let row: std::result::Result<Vec<usize>, _> =
                line.split_whitespace().map(str::parse).collect();
            table.push(row.map_err(|_| Error::InvalidTable("non-integer table entry".into()))?);
        }
        Group::from_table(table, "custom")
    }

    /// Parses built-in group names: `Zn`, `Dn`, `Sn`, and `A x B`.
    pub fn parse_spec(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if let Some((left, right)) = spec.split_once(" x ") {
            let g1 = Group::parse_spec(left)?;
            let g2 = Group::parse_spec(right)?;
            return Group::direct_product(&g1, &g2);
        }
        let err = || Error::UnknownGroupSpec(spec.to_string());
        let (kind, num) = spec.split_at(1);
        let n: usize = num.parse().map_err(|_| err())?;
        match kind {
            "Z" => Group::cyclic(n),
            "D" => Group::dihedral(n),
            "S" => Group::symmetric(n),
            _ => Err(err()),
        }
    }

    /// Smallest subgroup containing `s`, by product saturation.
    pub fn generated_subgroup(&self, s: &ElementSet) -> Result<Subgroup> {
        if let Some(&m) = s.members.iter().find(|&&m| m >= self.order) {
            return Err(Error::ElementOutOfRange {
                index: m,
                order: self.order,
            });
        }
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        let mut frontier: Vec<usize> = vec![0];
        for &m in &s.members {
            if !in_set[m] {
                in_set[m] = true;
                frontier.push(m);
            }
        }
        let mut members = frontier.clone();
        while let Some(a) = frontier.pop() {
            // Products with every current member, both orders.
            for i in 0..members.len() {
                let b = members[i];
                for prod in [self.mul(a, b), self.mul(b, a)] {
                    if !in_set[prod] {
                        in_set[prod] = true;
                        members.push(prod);
                        frontier.push(prod);
                    }
                }
            }
        }
        Ok(Subgroup {
            elements: ElementSet::new(members, self.order)?,
            parent_order: self.order,
        })
    }

    pub fn cyclic_subgroup(&self, e: usize) -> Result<Subgroup> {
        self.generated_subgroup(&ElementSet::new([e], self.order)?)
    }

    /// Complete subgroup lattice, sorted by (order, elements).
    pub fn all_subgroups(&self, cap: usize) -> Result<Vec<Subgroup>> {
        if self.order > cap {
            return Err(Error::Capacity {
                what: "group order for subgroup enumeration",
                size: self.order,
                cap,
            });
        }
        let mut found: Vec<Subgroup> = Vec::new();
        for e in 0..self.order {
            let h = self.cyclic_subgroup(e)?;
            if !found.contains(&h) {
                found.push(h);
            }
        }
        // Saturate under pairwise join until no new subgroup appears.
        loop {
            let mut added = false;
            for i in 0..found.len() {
                for j in 0..found.len() {
                    let union: Vec<usize> = found[i]
                        .elements
                        .members
                        .iter()
                        .chain(found[j].elements.members.iter())
                        .copied()
                        .collect();
                    let joined = self.generated_subgroup(&ElementSet::new(union, self.order)?)?;
                    if !found.contains(&joined) {
                        found.push(joined);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        found.sort_by_key(|h| (h.order(), h.elements.members.clone()));
        Ok(found)
    }

    /// tHt⁻¹
    pub fn conjugate_subgroup(&self, t: usize, h: &Subgroup) -> Subgroup {
        let members = h
            .elements
            .members
            .iter()
            .map(|&x| self.mul(self.mul(t, x), self.inv(t)));
        Subgroup {
            elements: ElementSet::new(members, self.order).expect("indices stay in range"),
            parent_order: self.order,
        }
    }

    /// Left coset tH.
    pub fn left_coset(&self, t: usize, h: &ElementSet) -> ElementSet {
        let members = h.members.iter().map(|&x| self.mul(t, x));
        ElementSet::new(members, self.order).expect("indices stay in range")
    }

    /// Right coset Ht.
    pub fn right_coset(&self, h: &ElementSet, t: usize) -> ElementSet {
        let members = h.members.iter().map(|&x| self.mul(x, t));
        ElementSet::new(members, self.order).expect("indices stay in range")
    }

    /// AB = {a·b | a ∈ A, b ∈ B}
    pub fn set_product(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let members = a
            .members
            .iter()
            .flat_map(|&x| b.members.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.mul(x, y));
        ElementSet::new(members, self.order).expect("indices stay in range")
    }

    /// A⁻¹ = {a⁻¹ | a ∈ A}
    pub fn set_inverse(&self, a: &ElementSet) -> ElementSet {
        let members = a.members.iter().map(|&x| self.inv(x));
        ElementSet::new(members, self.order).expect("indices stay in range")
    }

    /// True iff the given set is closed under product and inverse and
    /// contains the identity.
    pub fn is_subgroup_set(&self, s: &ElementSet) -> bool {
        if !s.contains(0) {
            return false;
        }
        s.members.iter().all(|&a| {
            s.contains(self.inv(a)) && s.members.iter().all(|&b| s.contains(self.mul(a, b)))
        })
    }
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    permute(&mut current, 0, &mut out);
    out.sort();
    out
}

fn permute(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permute(current, k + 1, out);
        current.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: &Group, members: &[usize]) -> ElementSet {
        ElementSet::new(members.iter().copied(), g.order).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = Group::cyclic(1).unwrap();
        assert_eq!(g.table, vec![vec![0]]);
    }

    #[test]
    fn cyclic_inverse() {
        let g = Group::cyclic(4).unwrap();
        assert_eq!(g.mul(1, 3), 0);
        assert_eq!(g.inv(1), 3);
    }

    #[test]
    fn zero_order_rejected() {
        assert_eq!(Group::cyclic(0), Err(Error::InvalidOrder));
    }

    #[test]
    fn dihedral_matches_symmetric_order() {
        let d3 = Group::dihedral(3).unwrap();
        let s3 = Group::symmetric(3).unwrap();
        assert_eq!(d3.order, 6);
        assert_eq!(d3.order, s3.order);
    }

    #[test]
    fn klein_four_is_all_involutions() {
        let z2 = Group::cyclic(2).unwrap();
        let k4 = Group::direct_product(&z2, &z2).unwrap();
        assert_eq!(k4.order, 4);
        for a in 1..4 {
            assert_eq!(k4.inv(a), a);
        }
    }

    #[test]
    fn bad_table_rejected() {
        let content = "order 2\n0 1\n1 1\n";
        assert!(matches!(
            Group::parse_table_file(content),
            Err(Error::InvalidTable(_))
        ));
    }

    #[test]
    fn table_file_roundtrip() {
        let content = "order 3\n0 1 2\n1 2 0\n2 0 1\n";
        let g = Group::parse_table_file(content).unwrap();
        assert_eq!(g.table, Group::cyclic(3).unwrap().table);
    }

    #[test]
    fn generated_subgroup_examples() {
        let z4 = Group::cyclic(4).unwrap();
        let h = z4.generated_subgroup(&set(&z4, &[2])).unwrap();
        assert_eq!(h.elements.members, vec![0, 2]);
        let e = z4.generated_subgroup(&ElementSet::empty(4)).unwrap();
        assert_eq!(e.elements.members, vec![0]);
    }

    #[test]
    fn rotation_and_reflection_generate_s3() {
        let s3 = Group::symmetric(3).unwrap();
        // Pick any element of order 3 and any involution.
        let rot = (1..6)
            .find(|&e| s3.cyclic_subgroup(e).unwrap().order() == 3)
            .unwrap();
        let refl = (1..6)
            .find(|&e| s3.cyclic_subgroup(e).unwrap().order() == 2)
            .unwrap();
        let h = s3.generated_subgroup(&set(&s3, &[rot, refl])).unwrap();
        assert_eq!(h.order(), 6);
    }

    #[test]
    fn subgroup_lattices() {
        let z4 = Group::cyclic(4).unwrap();
        let subs = z4.all_subgroups(DEFAULT_GROUP_CAP).unwrap();
        let orders: Vec<usize> = subs.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![1, 2, 4]);

        let z6 = Group::cyclic(6).unwrap();
        assert_eq!(z6.all_subgroups(DEFAULT_GROUP_CAP).unwrap().len(), 4);

        let z2 = Group::cyclic(2).unwrap();
        let k4 = Group::direct_product(&z2, &z2).unwrap();
        assert_eq!(k4.all_subgroups(DEFAULT_GROUP_CAP).unwrap().len(), 5);

        let s3 = Group::symmetric(3).unwrap();
        let s3_orders: Vec<usize> = s3
            .all_subgroups(DEFAULT_GROUP_CAP)
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        assert_eq!(s3_orders, vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn subgroup_cap_enforced() {
        let g = Group::cyclic(10).unwrap();
        assert!(matches!(g.all_subgroups(8), Err(Error::Capacity { .. })));
    }

    #[test]
    fn lagrange_holds() {
        for g in [
            Group::cyclic(6).unwrap(),
            Group::dihedral(4).unwrap(),
            Group::symmetric(4).unwrap(),
        ] {
            for h in g.all_subgroups(DEFAULT_GROUP_CAP).unwrap() {
                assert_eq!(g.order % h.order(), 0, "Lagrange fails in {}", g.name);
            }
        }
    }

    #[test]
    fn conjugation_in_abelian_group_is_trivial() {
        let z6 = Group::cyclic(6).unwrap();
        let h = z6.generated_subgroup(&set(&z6, &[2])).unwrap();
        for t in 0..6 {
            assert_eq!(z6.conjugate_subgroup(t, &h), h);
        }
    }

    #[test]
    fn conjugation_in_s3_moves_reflections() {
        let s3 = Group::symmetric(3).unwrap();
        let refl: Vec<usize> = (1..6)
            .filter(|&e| s3.cyclic_subgroup(e).unwrap().order() == 2)
            .collect();
        let h = s3.cyclic_subgroup(refl[0]).unwrap();
        let conj = s3.conjugate_subgroup(refl[1], &h);
        assert_eq!(conj.order(), 2);
        assert_ne!(conj, h);
        assert!(s3.is_subgroup_set(&conj.elements));
    }

    #[test]
    fn set_inverse_mod4() {
        let z4 = Group::cyclic(4).unwrap();
        let inv = z4.set_inverse(&set(&z4, &[1, 2]));
        assert_eq!(inv.members, vec![2, 3]);
    }

    #[test]
    fn cosets_partition_the_group() {
        let s3 = Group::symmetric(3).unwrap();
        for h in s3.all_subgroups(DEFAULT_GROUP_CAP).unwrap() {
            let mut covered = [false; 6];
            let mut count = 0;
            for t in 0..6 {
                let coset = s3.left_coset(t, &h.elements);
                if covered[coset.members[0]] {
                    for &m in &coset.members {
                        assert!(covered[m], "cosets overlap partially");
                    }
                    continue;
                }
                for &m in &coset.members {
                    assert!(!covered[m]);
                    covered[m] = true;
                }
                count += coset.len();
            }
            assert_eq!(count, 6);
        }
    }

    #[test]
    fn generated_is_idempotent() {
        let s3 = Group::symmetric(3).unwrap();
        let s = set(&s3, &[1, 4]);
        let once = s3.generated_subgroup(&s).unwrap();
        let twice = s3.generated_subgroup(&once.elements).unwrap();
        assert_eq!(once, twice);
    }
}
