//! Finitely generated permutation groups, enumerated in full.
//!
//! No stabilizer chains: every element is listed (sorted by image array), so
//! stabilizers and orbit questions are plain filters. The element count is
//! capped at [`DEFAULT_CAP`] unless a caller passes its own cap.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_CAP: usize = 2_000_000;

#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl PartialEq for PermGroup {
    /// Equality of element sets.
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Closes `generators` under composition. Fails once more than `cap`
    /// elements have been found.
    pub fn generate(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(g) = queue.pop_front() {
            for s in &generators {
                let h = s.compose(&g);
                if !seen.contains(&h) {
                    if seen.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    seen.insert(h.clone());
                    queue.push_back(h);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        Ok(PermGroup {
            degree,
            generators,
            elements,
            index,
        })
    }

    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::generate(degree, generators, DEFAULT_CAP)
    }

    /// Reads one 1-indexed cycle string per line; blank lines and lines
    /// starting with `#` are skipped.
    pub fn from_cycle_lines(text: &str, degree: usize, cap: usize) -> Result<Self> {
        let gens = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| Permutation::parse_cycles(l, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::generate(degree, gens, cap)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(degree, Vec::new()).expect("trivial group")
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        Self::symmetric_capped(n, DEFAULT_CAP)
    }

    pub fn symmetric_capped(n: usize, cap: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::swap(n, 0, 1));
        }
        if n >= 3 {
            gens.push(rotation(n));
        }
        Self::generate(n, gens, cap)
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("cyclic group needs n >= 1".into()));
        }
        Self::from_generators(n, vec![rotation(n)])
    }

    /// Rotations and reflections of the `n`-gon with vertices `0..n`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("dihedral group needs n >= 1".into()));
        }
        let reflection =
            Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).expect("reflection");
        Self::from_generators(n, vec![rotation(n), reflection])
    }

    /// The group generated by commuting involutions.
    pub fn elementary_abelian_2(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree || g.is_identity() || !g.compose(g).is_identity() {
                return Err(Error::NotInvolutions(g.to_string()));
            }
        }
        for (i, g) in generators.iter().enumerate() {
            for h in &generators[i + 1..] {
                if g.compose(h) != h.compose(g) {
                    return Err(Error::NotCommuting(g.to_string(), h.to_string()));
                }
            }
        }
        Self::from_generators(degree, generators)
    }

    /// Signed permutations on `2n` points, pairing `2i` with `2i + 1`.
    pub fn hyperoctahedral(n: usize) -> Result<Self> {
        let s2 = Self::symmetric(2)?;
        let sn = Self::symmetric(n)?;
        wreath(&s2, &sn, DEFAULT_CAP)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index.contains_key(g)
    }

    /// Generators joined as cycle strings, `"()"` when there are none.
    pub fn generator_string(&self) -> String {
        if self.generators.is_empty() {
            return "()".into();
        }
        self.generators
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Orbits on points, each sorted, ordered by least point.
    pub fn point_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < orbit.len() {
                let p = orbit[k];
                for g in &self.generators {
                    let q = g.apply(p);
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.point_orbits().len() <= 1
    }

    /// Every `g` with `g(S) = S` setwise.
    pub fn stabilizer_of_set(&self, set: &[usize]) -> Vec<Permutation> {
        let mut member = vec![false; self.degree];
        for &i in set {
            member[i] = true;
        }
        self.elements
            .iter()
            .filter(|g| set.iter().all(|&i| member[g.apply(i)]))
            .cloned()
            .collect()
    }

    /// Multiplication table over the sorted element list: `t[a][b]` is the
    /// index of `a ∘ b`.
    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        self.elements
            .iter()
            .map(|a| {
                self.elements
                    .iter()
                    .map(|b| self.index[&a.compose(b)])
                    .collect()
            })
            .collect()
    }
}

fn rotation(n: usize) -> Permutation {
    Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).expect("rotation")
}

/// `G ≀ H` on `m·l` points, with block `b` occupying points `b·m .. (b+1)·m`.
pub fn wreath(g: &PermGroup, h: &PermGroup, cap: usize) -> Result<PermGroup> {
    let (m, l) = (g.degree(), h.degree());
    let expected = (g.order() as u128)
        .checked_pow(l as u32)
        .and_then(|v| v.checked_mul(h.order() as u128))
        .unwrap_or(u128::MAX);
    if expected > cap as u128 {
        return Err(Error::GroupTooLarge { cap });
    }
    let n = m * l;
    let mut gens = Vec::new();
    for b in 0..l {
        for s in g.generators() {
            let mut images: Vec<usize> = (0..n).collect();
            for j in 0..m {
                images[b * m + j] = b * m + s.apply(j);
            }
            gens.push(Permutation::from_images(images)?);
        }
    }
    for s in h.generators() {
        let images = (0..n).map(|p| s.apply(p / m.max(1)) * m + p % m.max(1)).collect();
        gens.push(Permutation::from_images(images)?);
    }
    let group = PermGroup::generate(n, gens, cap)?;
    assert_eq!(group.order() as u128, expected, "wreath product order");
    Ok(group)
}

/// `G × H` with `G` on the first `m` points and `H` on the next `l`.
pub fn direct_product(g: &PermGroup, h: &PermGroup, cap: usize) -> Result<PermGroup> {
    let (m, l) = (g.degree(), h.degree());
    let expected = g.order() as u128 * h.order() as u128;
    if expected > cap as u128 {
        return Err(Error::GroupTooLarge { cap });
    }
    let mut gens = Vec::new();
    for s in g.generators() {
        gens.push(Permutation::from_images(
            (0..m).map(|i| s.apply(i)).chain(m..m + l).collect(),
        )?);
    }
    for s in h.generators() {
        gens.push(Permutation::from_images(
            (0..m).chain((0..l).map(|i| m + s.apply(i))).collect(),
        )?);
    }
    let group = PermGroup::generate(m + l, gens, cap)?;
    assert_eq!(group.order() as u128, expected, "direct product order");
    Ok(group)
}

/// Checks that `table` is a group and returns its left-regular
/// representation `g ↦ (x ↦ g·x)`.
pub fn left_regular(table: &[Vec<usize>]) -> Result<PermGroup> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    for (a, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAGroup(format!("row {a} has length {}", row.len())));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(Error::NotAGroup(format!("entry {v} out of range")));
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
    for a in 0..n {
        if !(0..n).any(|b| table[a][b] == e && table[b][a] == e) {
            return Err(Error::NotAGroup(format!("element {a} has no inverse")));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!("({a}{b}){c} != {a}({b}{c})")));
                }
            }
        }
    }
    let perms = table
        .iter()
        .map(|row| Permutation::from_images(row.clone()))
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::NotAGroup("a row is not a permutation".into()))?;
    let group = PermGroup::from_generators(n, greedy_generators(n, &perms))?;
    debug_assert_eq!(group.order(), n);
    Ok(group)
}

/// Walks `candidates` in order and keeps each one not already generated.
pub fn greedy_generators(degree: usize, candidates: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut closure = PermGroup::trivial(degree);
    for g in candidates {
        if !closure.contains(g) {
            gens.push(g.clone());
            closure = PermGroup::from_generators(degree, gens.clone()).expect("subgroup of a group");
        }
    }
    gens
}

/// Multiplication tables of small abstract groups.
pub mod tables {
    /// `Z_n` under addition.
    pub fn cyclic(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    /// Direct product; `(a, b)` is stored at `a·|H| + b`.
    pub fn product(g: &[Vec<usize>], h: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let (p, q) = (g.len(), h.len());
        (0..p * q)
            .map(|x| {
                (0..p * q)
                    .map(|y| g[x / q][y / q] * q + h[x % q][y % q])
                    .collect()
            })
            .collect()
    }

    /// Symmetries of the `n`-gon, order `2n`; `r^a s^b` is stored at `a + n·b`.
    pub fn dihedral(n: usize) -> Vec<Vec<usize>> {
        let mul = |x: usize, y: usize| {
            let (a, b) = (x % n, x / n);
            let (c, d) = (y % n, y / n);
            let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            rot + n * ((b + d) % 2)
        };
        (0..2 * n).map(|x| (0..2 * n).map(|y| mul(x, y)).collect()).collect()
    }

    /// Quaternion group; `±u` for `u` in `1, i, j, k` is stored at `4·sign + u`.
    pub fn quaternion() -> Vec<Vec<usize>> {
        // (sign, unit) of unit products, rows and columns in order 1, i, j, k.
        const UNITS: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (s, u) = UNITS[x % 4][y % 4];
                        ((x / 4 + y / 4 + s) % 2) * 4 + u
                    })
                    .collect()
            })
            .collect()
    }

    /// One table per isomorphism class of group of order at most 8, named.
    pub fn groups_up_to_order_8() -> Vec<(&'static str, Vec<Vec<usize>>)> {
        let z2 = cyclic(2);
        vec![
            ("Z1", cyclic(1)),
            ("Z2", cyclic(2)),
            ("Z3", cyclic(3)),
            ("Z4", cyclic(4)),
            ("Z2^2", product(&z2, &z2)),
            ("Z5", cyclic(5)),
            ("Z6", cyclic(6)),
            ("S3", dihedral(3)),
            ("Z7", cyclic(7)),
            ("Z8", cyclic(8)),
            ("Z4xZ2", product(&cyclic(4), &z2)),
            ("Z2^3", product(&product(&z2, &z2), &z2)),
            ("D8", dihedral(4)),
            ("Q8", quaternion()),
        ]
    }
}

/// One subgroup of `S_n` per conjugacy class, sorted by order and then by
/// generator string. Exhaustive, so `n <= 5`.
pub fn subgroup_sweep(n: usize) -> Result<Vec<PermGroup>> {
    if n > 5 {
        return Err(Error::TooLarge {
            requested: n,
            limit: 5,
        });
    }
    let sn = PermGroup::symmetric(n)?;
    let order = sn.order();
    let table = sn.cayley_table();
    let inverse: Vec<usize> = (0..order)
        .map(|a| (0..order).find(|&b| table[a][b] == 0).expect("inverse"))
        .collect();
    let close = |gens: &[usize]| -> u128 {
        let mut set: u128 = 1;
        let mut queue = vec![0usize];
        while let Some(g) = queue.pop() {
            for &s in gens {
                let h = table[s][g];
                if set >> h & 1 == 0 {
                    set |= 1 << h;
                    queue.push(h);
                }
            }
        }
        set
    };

    let cyclic: Vec<(u128, usize)> = {
        let mut seen = HashSet::new();
        (0..order)
            .filter_map(|g| {
                let set = close(&[g]);
                seen.insert(set).then_some((set, g))
            })
            .collect()
    };
    let mut subgroups: HashMap<u128, Vec<usize>> = HashMap::new();
    subgroups.insert(1, Vec::new());
    let mut frontier: Vec<(u128, Vec<usize>)> = vec![(1, Vec::new())];
    while let Some((set, gens)) = frontier.pop() {
        for &(cset, c) in &cyclic {
            if cset & !set == 0 {
                continue;
            }
            let mut joined_gens = gens.clone();
            joined_gens.push(c);
            let joined = close(&joined_gens);
            if let std::collections::hash_map::Entry::Vacant(slot) = subgroups.entry(joined) {
                slot.insert(joined_gens.clone());
                frontier.push((joined, joined_gens));
            }
        }
    }

    let conjugate = |set: u128, x: usize| -> u128 {
        let mut out = 0u128;
        let mut s = set;
        while s != 0 {
            let g = s.trailing_zeros() as usize;
            out |= 1 << table[table[x][g]][inverse[x]];
            s &= s - 1;
        }
        out
    };
    let mut classes: Vec<u128> = subgroups
        .keys()
        .map(|&set| (0..order).map(|x| conjugate(set, x)).min().expect("nonempty"))
        .collect();
    classes.sort_unstable();
    classes.dedup();

    let mut out = classes
        .into_iter()
        .map(|set| {
            let members: Vec<Permutation> = (0..order)
                .filter(|&i| set >> i & 1 == 1)
                .map(|i| sn.element(i).clone())
                .collect();
            PermGroup::from_generators(n, greedy_generators(n, &members))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_cached_key(|g| (g.order(), g.generator_string()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn named_orders() {
        assert_eq!(PermGroup::cyclic(4).unwrap().order(), 4);
        assert_eq!(PermGroup::dihedral(5).unwrap().order(), 10);
        let d6 = PermGroup::dihedral(6).unwrap();
        assert_eq!(d6.order(), 12);
        assert!(d6.contains(&cycle(6, "(1 2 3 4 5 6)")));
        assert_eq!(PermGroup::symmetric(4).unwrap().order(), 24);
        assert_eq!(PermGroup::symmetric(0).unwrap().order(), 1);
        let h3 = PermGroup::hyperoctahedral(3).unwrap();
        assert_eq!((h3.degree(), h3.order()), (6, 48));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            PermGroup::symmetric_capped(6, 100),
            Err(Error::GroupTooLarge { cap: 100 })
        ));
        let s3 = PermGroup::symmetric(3).unwrap();
        assert!(wreath(&s3, &s3, 1000).is_err());
    }

    #[test]
    fn generate_is_idempotent() {
        let d5 = PermGroup::dihedral(5).unwrap();
        let again = PermGroup::from_generators(5, d5.elements().to_vec()).unwrap();
        assert_eq!(again, d5);
    }

    #[test]
    fn wreath_orders() {
        let s2 = PermGroup::symmetric(2).unwrap();
        let s3 = PermGroup::symmetric(3).unwrap();
        let w = wreath(&s2, &s2, DEFAULT_CAP).unwrap();
        assert_eq!((w.degree(), w.order()), (4, 8));
        assert_eq!(wreath(&s3, &s2, DEFAULT_CAP).unwrap().order(), 72);
        assert_eq!(wreath(&s2, &s3, DEFAULT_CAP).unwrap(), PermGroup::hyperoctahedral(3).unwrap());
        assert_eq!(wreath(&s3, &s3, DEFAULT_CAP).unwrap().order(), 1296);
    }

    #[test]
    fn direct_products() {
        let s2 = PermGroup::symmetric(2).unwrap();
        let v4 = direct_product(&s2, &s2, DEFAULT_CAP).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.elements().iter().all(|g| g.compose(g).is_identity()));
        let a = wreath(&s2, &s2, DEFAULT_CAP).unwrap();
        let b = wreath(&PermGroup::symmetric(3).unwrap(), &s2, DEFAULT_CAP).unwrap();
        let ab = direct_product(&a, &b, DEFAULT_CAP).unwrap();
        assert_eq!((ab.degree(), ab.order()), (10, 576));
        let shifted = direct_product(&PermGroup::trivial(2), &PermGroup::cyclic(3).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(shifted.order(), 3);
        assert!(shifted.contains(&cycle(5, "(3 4 5)")));
    }

    #[test]
    fn elementary_abelian_validation() {
        let a = cycle(4, "(1 2)");
        let b = cycle(4, "(3 4)");
        assert_eq!(PermGroup::elementary_abelian_2(4, vec![a.clone(), b]).unwrap().order(), 4);
        assert!(matches!(
            PermGroup::elementary_abelian_2(4, vec![cycle(4, "(1 2 3)")]),
            Err(Error::NotInvolutions(_))
        ));
        assert!(matches!(
            PermGroup::elementary_abelian_2(4, vec![a, cycle(4, "(2 3)")]),
            Err(Error::NotCommuting(..))
        ));
    }

    #[test]
    fn stabilizers() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let st = s3.stabilizer_of_set(&[0, 1]);
        assert_eq!(st.len(), 2);
        assert!(st.contains(&cycle(3, "(1 2)")));
        let d5 = PermGroup::dihedral(5).unwrap();
        let st = d5.stabilizer_of_set(&[0]);
        assert_eq!(st.len(), 2);
        assert!(st.contains(&cycle(5, "(2 5)(3 4)")));
        assert_eq!(d5.stabilizer_of_set(&[0, 1, 2, 3, 4]).len(), 10);
    }

    #[test]
    fn stabilizer_is_closed() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let st = s4.stabilizer_of_set(&[0, 2]);
        for a in &st {
            assert!(st.contains(&a.inverse()));
            for b in &st {
                assert!(st.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn left_regular_examples() {
        let z2 = left_regular(&tables::cyclic(2)).unwrap();
        assert_eq!(z2.elements()[1], cycle(2, "(1 2)"));
        let z4 = left_regular(&tables::cyclic(4)).unwrap();
        assert_eq!(z4, PermGroup::cyclic(4).unwrap());
        let v4 = left_regular(&tables::product(&tables::cyclic(2), &tables::cyclic(2))).unwrap();
        let non_id: Vec<_> = v4.elements().iter().filter(|g| !g.is_identity()).collect();
        assert_eq!(non_id.len(), 3);
        for g in &non_id {
            assert_eq!(g.cycles().len(), 2);
        }
    }

    #[test]
    fn left_regular_is_free_and_transitive() {
        for (name, t) in tables::groups_up_to_order_8() {
            let g = left_regular(&t).unwrap();
            assert_eq!(g.order(), t.len(), "{name}");
            assert!(g.is_transitive(), "{name}");
            for h in g.elements().iter().filter(|h| !h.is_identity()) {
                assert!((0..t.len()).all(|x| h.apply(x) != x), "{name}");
            }
        }
    }

    #[test]
    fn bad_tables() {
        assert!(left_regular(&[]).is_err());
        assert!(left_regular(&[vec![0, 1], vec![1, 1]]).is_err());
        // Identity and inverses present, but not associative.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(left_regular(&t), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn quaternion_is_nonabelian_with_one_involution() {
        let q = tables::quaternion();
        assert!(left_regular(&q).is_ok());
        let involutions = (1..8).filter(|&x| q[x][x] == 0).count();
        assert_eq!(involutions, 1);
        assert_ne!(q[1][2], q[2][1]);
    }

    #[test]
    fn sweep_class_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| subgroup_sweep(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 19]);
        let s3 = subgroup_sweep(3).unwrap();
        let orders: Vec<usize> = s3.iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        assert!(subgroup_sweep(6).is_err());
    }

    #[test]
    fn cycle_file_parsing() {
        let g = PermGroup::from_cycle_lines("# rotation\n(1 2 3 4)\n\n(1 3)\n", 4, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 8);
        assert!(PermGroup::from_cycle_lines("(1 5)", 4, DEFAULT_CAP).is_err());
    }
}
