//! Shifted matroids `⟨T⟩`: the bases are the principal order ideal generated
//! by the defining basis `T` in the componentwise order on `k`-subsets of `[n]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{block_decomposition, leq_letters, BlockDecomposition, SubsetWord};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DefiningBasis {
    t: SubsetWord,
}

impl DefiningBasis {
    pub fn new(t: SubsetWord) -> Self {
        DefiningBasis { t }
    }

    pub fn from_letters(n: u32, letters: &[u32]) -> Result<Self> {
        Ok(DefiningBasis::new(SubsetWord::new(n, letters.to_vec())?))
    }

    pub fn t(&self) -> &SubsetWord {
        &self.t
    }

    pub fn n(&self) -> u32 {
        self.t.n()
    }

    /// Rank, i.e. `|T|`.
    pub fn k(&self) -> usize {
        self.t.len()
    }

    pub fn blocks(&self) -> Result<BlockDecomposition> {
        block_decomposition(&self.t)
    }
}

impl fmt::Display for DefiningBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; T={}", self.n(), self.t)
    }
}

impl FromStr for DefiningBasis {
    type Err = Error;

    /// Parses `n=8; T=2 4 6 8`.
    fn from_str(s: &str) -> Result<Self> {
        let (n_part, t_part) = s
            .split_once(';')
            .ok_or_else(|| Error::invalid(format!("expected `n=..; T=..`, got {s:?}")))?;
        let n = n_part
            .trim()
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse::<u32>().ok())
            .ok_or_else(|| Error::invalid(format!("bad ground-set size in {s:?}")))?;
        let letters = t_part
            .trim()
            .strip_prefix("T=")
            .ok_or_else(|| Error::invalid(format!("missing `T=` in {s:?}")))?;
        Ok(DefiningBasis::new(SubsetWord::parse(n, letters)?))
    }
}

impl Serialize for DefiningBasis {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("DefiningBasis", 2)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("t", &self.t)?;
        st.end()
    }
}

pub fn is_basis(m: &DefiningBasis, s: &SubsetWord) -> Result<bool> {
    if s.n() != m.n() {
        return Err(Error::invalid(format!(
            "ground-set mismatch: n={} vs n={}",
            s.n(),
            m.n()
        )));
    }
    if s.len() != m.k() {
        return Err(Error::invalid(format!(
            "candidate has {} elements, rank is {}",
            s.len(),
            m.k()
        )));
    }
    Ok(leq_letters(s.letters(), m.t.letters()))
}

/// Number of bases, by the running-sum recurrence over positions: the number of
/// increasing prefixes ending at `x` is the sum over all shorter prefixes ending below `x`.
pub fn count_bases(m: &DefiningBasis) -> BigUint {
    count_below(m.t.letters())
}

/// Strictly increasing sequences `c` with `c[i] <= bounds[i]`.
pub(crate) fn count_below(bounds: &[u32]) -> BigUint {
    let Some(&top) = bounds.last() else {
        return BigUint::from(1u32);
    };
    let top = top as usize;
    // ways[x] = number of valid prefixes whose last letter is x
    let mut ways = vec![BigUint::zero(); top + 1];
    for w in &mut ways[1..=bounds[0] as usize] {
        *w = BigUint::from(1u32);
    }
    for &bound in &bounds[1..] {
        let mut next = vec![BigUint::zero(); top + 1];
        let mut running = BigUint::zero();
        for x in 1..=bound as usize {
            running += &ways[x - 1];
            next[x] = running.clone();
        }
        ways = next;
    }
    ways.into_iter().sum()
}

/// Calls `visit` on every strictly increasing `c` with `c[0] >= first_min` and
/// `c[i] <= bounds[i]`, in lexicographic order.
pub(crate) fn for_each_below(bounds: &[u32], first_min: u32, visit: &mut impl FnMut(&[u32])) {
    fn go(bounds: &[u32], lo: u32, buf: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
        let i = buf.len();
        if i == bounds.len() {
            visit(buf);
            return;
        }
        for x in lo..=bounds[i] {
            buf.push(x);
            go(bounds, x + 1, buf, visit);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(bounds.len());
    go(bounds, first_min.max(1), &mut buf, visit);
}

/// All bases in lexicographic order. Fails when there are more than `cap`.
pub fn enumerate_bases(m: &DefiningBasis, cap: u128) -> Result<Vec<SubsetWord>> {
    let count = count_bases(m);
    let needed = count.to_u128().unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::ResourceLimit {
            what: "basis enumeration",
            needed,
            cap,
        });
    }
    let n = m.n();
    let mut out = Vec::with_capacity(needed as usize);
    for_each_below(m.t.letters(), 1, &mut |c| {
        out.push(SubsetWord::new(n, c.to_vec()).expect("generated increasing subset"));
    });
    Ok(out)
}

/// A minimal dependent set. Size-one circuits are loops.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Circuit {
    pub elements: SubsetWord,
}

impl Circuit {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.elements.fmt(f)
    }
}

/// Sorts circuits by size, then lexicographically.
pub fn sort_circuits(circuits: &mut [Circuit]) {
    circuits.sort_by(|a, b| {
        a.size()
            .cmp(&b.size())
            .then_with(|| a.elements.letters().cmp(b.elements.letters()))
    });
}

/// All circuits, generated family by family from the block suffixes of `T`.
///
/// For the suffix `T_i .. T_l` of length `m`, the circuits are `c0 c1 .. cm` with
/// `c1 .. cm ≺ T_i .. T_l`, `c0 < c1`, and `c0` above the last element of `T_{i-1}`
/// when `i > 1`. Loops are the elements above `max(T)`.
pub fn circuits(m: &DefiningBasis) -> Vec<Circuit> {
    let n = m.n();
    let t = m.t.letters();
    let k = t.len();
    let mut out: Vec<Circuit> = loops(m)
        .letters()
        .iter()
        .map(|&x| Circuit {
            elements: SubsetWord::new(n, vec![x]).expect("loop in range"),
        })
        .collect();
    if let Ok(decomp) = m.blocks() {
        let mut suffix_start = k;
        for block in decomp.blocks.iter().rev() {
            suffix_start -= block.len();
            let suffix = &t[suffix_start..];
            let floor = if suffix_start == 0 {
                0
            } else {
                t[suffix_start - 1]
            };
            for_each_below(suffix, floor + 2, &mut |c| {
                for c0 in floor + 1..c[0] {
                    let mut letters = Vec::with_capacity(c.len() + 1);
                    letters.push(c0);
                    letters.extend_from_slice(c);
                    out.push(Circuit {
                        elements: SubsetWord::new(n, letters).expect("circuit is increasing"),
                    });
                }
            });
        }
    }
    sort_circuits(&mut out);
    out
}

/// Elements in no basis: everything above `max(T)`.
pub fn loops(m: &DefiningBasis) -> SubsetWord {
    let n = m.n();
    let top = m.t.max_element().unwrap_or(0);
    SubsetWord::new(n, (top + 1..=n).collect()).expect("loops lie in [n]")
}

/// Elements in every basis: the longest initial run `1, 2, .., j` of `T`.
pub fn coloops(m: &DefiningBasis) -> SubsetWord {
    let j = leading_run(m.t.letters());
    SubsetWord::initial_segment(m.n(), j)
}

fn leading_run(t: &[u32]) -> u32 {
    t.iter()
        .enumerate()
        .take_while(|&(i, &x)| x as usize == i + 1)
        .count() as u32
}

/// The result of contracting every coloop of a shifted matroid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contraction {
    pub basis: DefiningBasis,
    /// Number of coloops removed; they were `1..=removed`.
    pub removed: u32,
}

impl Contraction {
    /// Label of old element `x` after contraction, `None` for a contracted coloop.
    pub fn relabel(&self, x: u32) -> Option<u32> {
        (x > self.removed).then(|| x - self.removed)
    }

    /// Label in the original ground set of contracted element `y`.
    pub fn original(&self, y: u32) -> u32 {
        y + self.removed
    }

    /// Lifts a subset of the contracted ground set back, adding the coloops.
    pub fn lift(&self, s: &SubsetWord) -> SubsetWord {
        let n = self.basis.n() + self.removed;
        let letters = (1..=self.removed)
            .chain(s.letters().iter().map(|&y| self.original(y)))
            .collect();
        SubsetWord::new(n, letters).expect("lifted subset is increasing")
    }
}

pub fn contract_coloops(m: &DefiningBasis) -> Contraction {
    let t = m.t.letters();
    let j = leading_run(t);
    let letters = t[j as usize..].iter().map(|&x| x - j).collect();
    let basis = DefiningBasis::new(
        SubsetWord::new(m.n() - j, letters).expect("contracted basis is increasing"),
    );
    Contraction { basis, removed: j }
}

/// The dual `⟨T*⟩` with `T* = {n + 1 - x : x ∉ T}`.
pub fn dual(m: &DefiningBasis) -> DefiningBasis {
    let n = m.n();
    let mut letters: Vec<u32> =
        m.t.complement()
            .letters()
            .iter()
            .map(|&x| n + 1 - x)
            .collect();
    letters.reverse();
    DefiningBasis::new(SubsetWord::new(n, letters).expect("dual basis is increasing"))
}

/// Every circuit has at least `k` elements. Rank 0 is reported as degenerate.
///
/// For `k >= 2` this is the shape `l, m, m+1, .., n` with `l < m`; any rank-one
/// matroid is paving.
pub fn is_paving(m: &DefiningBasis) -> Result<bool> {
    let t = m.t.letters();
    let k = t.len();
    match k {
        0 => Err(Error::Degenerate("paving test on a rank-0 matroid".into())),
        1 => Ok(true),
        _ => {
            let n = m.n();
            let tail = &t[1..];
            let first_tail = n + 1 - tail.len() as u32;
            Ok(tail
                .iter()
                .enumerate()
                .all(|(i, &x)| x == first_tail + i as u32))
        }
    }
}

/// The structural reading of binary shifted matroids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BinaryShape {
    /// `T = [n]`: no circuits.
    Boolean,
    /// `T = {1..k} \ {skipped} ∪ {top}` with `skipped <= k < top <= n`.
    BumpedInitialSegment {
        skipped: u32,
        top: u32,
    },
    /// `T = {1..k}` with `k < n`: a free matroid plus loops. Binary by the circuit
    /// test, but neither named shape.
    FreePlusLoops,
    Other,
}

impl BinaryShape {
    /// `Boolean` or `BumpedInitialSegment`.
    pub fn is_named_shape(&self) -> bool {
        matches!(
            self,
            BinaryShape::Boolean | BinaryShape::BumpedInitialSegment { .. }
        )
    }

    /// The answer once free-plus-loops is counted as binary.
    pub fn is_binary(&self) -> bool {
        !matches!(self, BinaryShape::Other)
    }
}

pub fn is_binary_structural(m: &DefiningBasis) -> Result<BinaryShape> {
    let t = m.t.letters();
    let k = t.len() as u32;
    let n = m.n();
    if k == 0 {
        return Err(Error::Degenerate("binary test on a rank-0 matroid".into()));
    }
    let run = leading_run(t);
    if run == k {
        return Ok(if k == n {
            BinaryShape::Boolean
        } else {
            BinaryShape::FreePlusLoops
        });
    }
    let top = t[t.len() - 1];
    let rest = &t[..t.len() - 1];
    if top > k && rest.iter().all(|&x| x <= k) {
        let skipped = (1..=k)
            .find(|x| rest.binary_search(x).is_err())
            .expect("k-1 letters inside [k] miss exactly one");
        return Ok(BinaryShape::BumpedInitialSegment { skipped, top });
    }
    Ok(BinaryShape::Other)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn db(n: u32, t: &[u32]) -> DefiningBasis {
        DefiningBasis::from_letters(n, t).unwrap()
    }

    fn sw(n: u32, t: &[u32]) -> SubsetWord {
        SubsetWord::new(n, t.to_vec()).unwrap()
    }

    fn letters(v: &[SubsetWord]) -> Vec<Vec<u32>> {
        v.iter().map(|s| s.letters().to_vec()).collect()
    }

    #[test]
    fn basis_membership() {
        let m = db(4, &[2, 4]);
        assert!(is_basis(&m, &sw(4, &[1, 3])).unwrap());
        assert!(is_basis(&m, m.t()).unwrap());
        let m = db(8, &[2, 4, 6, 8]);
        assert!(!is_basis(&m, &sw(8, &[3, 4, 5, 6])).unwrap());
        assert!(is_basis(&m, &sw(8, &[1, 2])).is_err());
    }

    #[test]
    fn enumerate_small() {
        let m = db(4, &[2, 4]);
        assert_eq!(
            letters(&enumerate_bases(&m, 100).unwrap()),
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]
        );
        assert_eq!(count_bases(&m), BigUint::from(5u32));
        let m = db(7, &[1, 2, 3]);
        assert_eq!(
            letters(&enumerate_bases(&m, 100).unwrap()),
            vec![vec![1, 2, 3]]
        );
        assert_eq!(count_bases(&m), BigUint::from(1u32));
    }

    #[test]
    fn enumerate_respects_cap() {
        let m = db(8, &[2, 4, 6, 8]);
        assert_eq!(enumerate_bases(&m, 42).unwrap().len(), 42);
        assert!(matches!(
            enumerate_bases(&m, 41),
            Err(Error::ResourceLimit { needed: 42, .. })
        ));
    }

    #[test]
    fn rank_zero_counts_one() {
        let m = db(3, &[]);
        assert_eq!(count_bases(&m), BigUint::from(1u32));
        assert_eq!(enumerate_bases(&m, 1).unwrap(), vec![SubsetWord::empty(3)]);
    }

    #[test]
    fn circuits_of_2468() {
        let cs = circuits(&db(8, &[2, 4, 6, 8]));
        let of_size = |k: usize| -> Vec<Vec<u32>> {
            cs.iter()
                .filter(|c| c.size() == k)
                .map(|c| c.elements.letters().to_vec())
                .collect()
        };
        assert_eq!(of_size(2), vec![vec![7, 8]]);
        assert_eq!(of_size(3), vec![vec![5, 6, 7], vec![5, 6, 8]]);
        assert_eq!(
            of_size(4),
            vec![
                vec![3, 4, 5, 6],
                vec![3, 4, 5, 7],
                vec![3, 4, 5, 8],
                vec![3, 4, 6, 7],
                vec![3, 4, 6, 8]
            ]
        );
        assert_eq!(of_size(5).len(), 14);
        assert!(of_size(5).iter().all(|c| c[0] == 1 && c[1] == 2));
        assert_eq!(cs.len(), 22);
    }

    #[test]
    fn circuits_of_24_and_free() {
        let cs: Vec<String> = circuits(&db(4, &[2, 4]))
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(cs, vec!["3 4", "1 2 3", "1 2 4"]);
        assert!(circuits(&db(5, &[1, 2, 3, 4, 5])).is_empty());
        let cs: Vec<String> = circuits(&db(3, &[]))
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(cs, vec!["1", "2", "3"]);
    }

    #[test]
    fn loops_and_coloops() {
        let m = db(6, &[1, 2, 3]);
        assert_eq!(coloops(&m).letters(), &[1, 2, 3]);
        assert_eq!(loops(&m).letters(), &[4, 5, 6]);
        let m = db(8, &[2, 4, 6]);
        assert_eq!(loops(&m).letters(), &[7, 8]);
        assert!(coloops(&m).is_empty());
        assert_eq!(coloops(&db(7, &[1, 3, 5, 7])).letters(), &[1]);
    }

    #[test]
    fn contraction_examples() {
        let c = contract_coloops(&db(7, &[1, 3, 5, 7]));
        assert_eq!(c.basis, db(6, &[2, 4, 6]));
        assert_eq!(c.removed, 1);
        assert_eq!(c.relabel(1), None);
        assert_eq!(c.relabel(5), Some(4));

        let m = db(8, &[2, 4, 6, 8]);
        let c = contract_coloops(&m);
        assert_eq!(c.basis, m);
        assert_eq!(c.removed, 0);

        let c = contract_coloops(&db(6, &[1, 2, 5, 6]));
        assert_eq!(c.basis, db(4, &[3, 4]));
        assert_eq!(c.lift(c.basis.t()), sw(6, &[1, 2, 5, 6]));

        let c = contract_coloops(&db(4, &[1, 2, 3, 4]));
        assert_eq!(c.basis, db(0, &[]));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual(&db(4, &[2, 4])), db(4, &[2, 4]));
        assert_eq!(dual(&db(8, &[2, 5, 6, 8])), db(8, &[2, 5, 6, 8]));
        assert_eq!(dual(&db(6, &[1, 2])), db(6, &[1, 2, 3, 4]));
        assert_eq!(dual(&db(5, &[1, 2, 3, 4, 5])), db(5, &[]));
    }

    #[test]
    fn paving_examples() {
        assert!(is_paving(&db(10, &[3, 7, 8, 9, 10])).unwrap());
        assert!(!is_paving(&db(8, &[2, 4, 6, 8])).unwrap());
        assert!(is_paving(&db(5, &[1, 2, 3, 4, 5])).unwrap());
        assert!(is_paving(&db(5, &[2])).unwrap());
        assert!(!is_paving(&db(5, &[1, 2])).unwrap());
        assert!(is_paving(&db(5, &[4, 5])).unwrap());
        assert!(is_paving(&db(5, &[3, 4, 5])).unwrap());
        assert!(is_paving(&db(5, &[]).clone()).is_err());
    }

    #[test]
    fn binary_examples() {
        assert_eq!(
            is_binary_structural(&db(5, &[1, 2, 4])).unwrap(),
            BinaryShape::BumpedInitialSegment { skipped: 3, top: 4 }
        );
        assert_eq!(
            is_binary_structural(&db(8, &[2, 4, 6, 8])).unwrap(),
            BinaryShape::Other
        );
        assert_eq!(
            is_binary_structural(&db(4, &[1, 2, 3, 4])).unwrap(),
            BinaryShape::Boolean
        );
        assert_eq!(
            is_binary_structural(&db(4, &[1, 2])).unwrap(),
            BinaryShape::FreePlusLoops
        );
        assert!(!BinaryShape::FreePlusLoops.is_named_shape());
        assert!(BinaryShape::FreePlusLoops.is_binary());
    }

    #[test]
    fn textual_form_round_trips() {
        let m: DefiningBasis = "n=8; T=2 4 6 8".parse().unwrap();
        assert_eq!(m, db(8, &[2, 4, 6, 8]));
        assert_eq!(m.to_string(), "n=8; T=2 4 6 8");
        assert!("T=2 4".parse::<DefiningBasis>().is_err());
        assert!("n=3; T=4".parse::<DefiningBasis>().is_err());
    }
}
