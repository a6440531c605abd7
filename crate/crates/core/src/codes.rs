//! Stembridge codes and their extended variant, with enumeration, the
//! positional symmetric-group action, and orbit decomposition.

use std::collections::BTreeMap;
use std::fmt;

use crate::par::maybe_par_flat_map;
use crate::perm::Perm;
use crate::{Error, Result};

/// A letter of an extended code: a number, or the unmarked symbol `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Num(u32),
    Inf,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Num(k) => write!(f, "{k}"),
            Letter::Inf => write!(f, "z"),
        }
    }
}

/// A code: a word `alpha` over `{0, 1, ..., m}` in which every positive
/// letter `k` occurs at least twice and the positive letters form a prefix
/// `1..m`, together with a mark `f(k)` for each positive letter with
/// `1 ≤ f(k) ≤ occ(k) − 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Code {
    pub alpha: Vec<u32>,
    /// `marks[k-1] = f(k)` for `k = 1..m`.
    pub marks: Vec<u32>,
}

/// An extended code: like a code, but letters may also be `∞`; the marking
/// rules apply to the numeric letters only. The all-`∞` word is allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtendedCode {
    pub alpha: Vec<Letter>,
    pub marks: Vec<u32>,
}

fn validate_counts(counts: &BTreeMap<u32, usize>, marks: &[u32]) -> Result<()> {
    let m = counts.keys().max().copied().unwrap_or(0);
    for k in 1..=m {
        let occ = counts.get(&k).copied().unwrap_or(0);
        if occ < 2 {
            return Err(Error::invalid(format!(
                "letter {k} occurs {occ} times; every positive letter needs at least 2"
            )));
        }
    }
    if marks.len() as u32 != m {
        return Err(Error::invalid(format!(
            "expected {m} marks, got {}",
            marks.len()
        )));
    }
    for (k, &f) in (1u32..).zip(marks) {
        let occ = counts[&k];
        if f < 1 || f as usize >= occ {
            return Err(Error::invalid(format!(
                "mark f({k}) = {f} out of range 1..{}",
                occ - 1
            )));
        }
    }
    Ok(())
}

impl Code {
    pub fn new(alpha: Vec<u32>, marks: Vec<u32>) -> Result<Code> {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &a in &alpha {
            if a > 0 {
                *counts.entry(a).or_insert(0) += 1;
            }
        }
        validate_counts(&counts, &marks)?;
        Ok(Code { alpha, marks })
    }

    pub fn n(&self) -> u32 {
        self.alpha.len() as u32
    }

    /// Largest letter used.
    pub fn max_letter(&self) -> u32 {
        self.marks.len() as u32
    }

    /// The index: the sum of the marks.
    pub fn index(&self) -> i64 {
        self.marks.iter().map(|&f| f as i64).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let f: serde_json::Map<String, serde_json::Value> = (1u32..)
            .zip(&self.marks)
            .map(|(k, &v)| (k.to_string(), serde_json::json!(v)))
            .collect();
        serde_json::json!({ "alpha": self.alpha, "f": f })
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_marked(f, &self.alpha, &self.marks, Some)
    }
}

impl ExtendedCode {
    pub fn new(alpha: Vec<Letter>, marks: Vec<u32>) -> Result<ExtendedCode> {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &a in &alpha {
            if let Letter::Num(k) = a {
                if k > 0 {
                    *counts.entry(k).or_insert(0) += 1;
                }
            }
        }
        validate_counts(&counts, &marks)?;
        Ok(ExtendedCode { alpha, marks })
    }

    pub fn n(&self) -> u32 {
        self.alpha.len() as u32
    }

    pub fn max_letter(&self) -> u32 {
        self.marks.len() as u32
    }

    /// The index: sum of marks, except `−1` for the all-`∞` word.
    pub fn index(&self) -> i64 {
        if self.alpha.iter().all(|&a| a == Letter::Inf) {
            return -1;
        }
        self.marks.iter().map(|&f| f as i64).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let alpha: Vec<serde_json::Value> = self
            .alpha
            .iter()
            .map(|a| match a {
                Letter::Num(k) => serde_json::json!(k),
                Letter::Inf => serde_json::json!("inf"),
            })
            .collect();
        let f: serde_json::Map<String, serde_json::Value> = (1u32..)
            .zip(&self.marks)
            .map(|(k, &v)| (k.to_string(), serde_json::json!(v)))
            .collect();
        serde_json::json!({ "alpha": alpha, "f": f })
    }
}

fn render_marked<L: Copy + PartialEq + fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    alpha: &[L],
    marks: &[u32],
    numeric: impl Fn(L) -> Option<u32>,
) -> fmt::Result {
    let mut seen: BTreeMap<u32, u32> = BTreeMap::new();
    for &a in alpha {
        write!(f, "{a}")?;
        if let Some(k) = numeric(a) {
            if k > 0 {
                let c = seen.entry(k).or_insert(0);
                *c += 1;
                if *c == marks[(k - 1) as usize] + 1 {
                    write!(f, "*")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for ExtendedCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_marked(f, &self.alpha, &self.marks, |a| match a {
            Letter::Num(k) => Some(k),
            Letter::Inf => None,
        })
    }
}

/// All words of length `n` over `{0..n}` whose positive letters form a
/// prefix `1..m` with every positive letter repeated.
fn words(n: u32) -> Vec<Vec<u32>> {
    // each positive letter needs two occurrences, so letters stay <= n/2
    let alphabet_max = n / 2;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n as usize);
    fn rec(n: u32, alphabet_max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() as u32 == n {
            let m = cur.iter().copied().max().unwrap_or(0);
            let mut counts = vec![0u32; m as usize];
            for &a in cur.iter() {
                if a > 0 {
                    counts[(a - 1) as usize] += 1;
                }
            }
            // >= 2 for every letter up to the maximum also rules out gaps
            if counts.iter().all(|&c| c >= 2) {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..=alphabet_max {
            cur.push(a);
            rec(n, alphabet_max, cur, out);
            cur.pop();
        }
    }
    rec(n, alphabet_max, &mut cur, &mut out);
    out
}

fn mark_choices(counts: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &c in counts {
        let mut next = Vec::new();
        for prefix in &out {
            for f in 1..c {
                let mut p = prefix.clone();
                p.push(f);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// All codes of length `n`, grouped by index: `result[j]` holds the codes of
/// index `j`, each group sorted.
pub fn enumerate_codes(n: u32) -> Vec<Vec<Code>> {
    let all: Vec<Code> = maybe_par_flat_map(&words(n), |alpha| {
        let m = alpha.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0u32; m as usize];
        for &a in alpha.iter() {
            if a > 0 {
                counts[(a - 1) as usize] += 1;
            }
        }
        mark_choices(&counts)
            .into_iter()
            .map(|marks| Code {
                alpha: alpha.clone(),
                marks,
            })
            .collect::<Vec<_>>()
    });
    group_by_index(all, |c| c.index(), 0)
}

/// All extended codes of length `n`, grouped by index; `result[0]` is index
/// `−1` (the all-`∞` word), `result[j + 1]` is index `j`.
pub fn enumerate_extended_codes(n: u32) -> Vec<Vec<ExtendedCode>> {
    // an extended word is a word plus a choice of which zero positions
    // become ∞ — equivalently, a word over {0, 1..m, ∞}
    let all: Vec<ExtendedCode> = maybe_par_flat_map(&words(n), |alpha| {
        let m = alpha.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0u32; m as usize];
        let zeros: Vec<usize> = alpha
            .iter()
            .enumerate()
            .filter(|&(_, &a)| a == 0)
            .map(|(i, _)| i)
            .collect();
        for &a in alpha.iter() {
            if a > 0 {
                counts[(a - 1) as usize] += 1;
            }
        }
        let marks = mark_choices(&counts);
        let mut out = Vec::new();
        for inf_mask in 0u32..(1 << zeros.len()) {
            let mut letters: Vec<Letter> =
                alpha.iter().map(|&a| Letter::Num(a)).collect();
            for (b, &pos) in zeros.iter().enumerate() {
                if inf_mask >> b & 1 == 1 {
                    letters[pos] = Letter::Inf;
                }
            }
            for marking in &marks {
                out.push(ExtendedCode {
                    alpha: letters.clone(),
                    marks: marking.clone(),
                });
            }
        }
        out
    });
    group_by_index(all, |c| c.index(), 1)
}

fn group_by_index<C: Ord>(all: Vec<C>, index: impl Fn(&C) -> i64, offset: i64) -> Vec<Vec<C>> {
    let top = all.iter().map(&index).max().unwrap_or(-offset);
    let mut groups: Vec<Vec<C>> = (0..=(top + offset)).map(|_| Vec::new()).collect();
    for c in all {
        let j = (index(&c) + offset) as usize;
        groups[j].push(c);
    }
    for g in &mut groups {
        g.sort();
    }
    groups
}

/// The positional action: `σ` moves the letter at position `i` to position
/// `σ(i)`; the marks are unchanged.
pub fn act_code(sigma: &Perm, c: &Code) -> Code {
    let mut alpha = vec![0u32; c.alpha.len()];
    for (i, &a) in (1u32..).zip(&c.alpha) {
        alpha[(sigma.apply(i) - 1) as usize] = a;
    }
    Code {
        alpha,
        marks: c.marks.clone(),
    }
}

/// The positional action on extended codes.
pub fn act_extended_code(sigma: &Perm, c: &ExtendedCode) -> ExtendedCode {
    let mut alpha = vec![Letter::Num(0); c.alpha.len()];
    for (i, &a) in (1u32..).zip(&c.alpha) {
        alpha[(sigma.apply(i) - 1) as usize] = a;
    }
    ExtendedCode {
        alpha,
        marks: c.marks.clone(),
    }
}

/// One orbit of the positional action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Lexicographically smallest member.
    pub representative_alpha: Vec<Letter>,
    pub marks: Vec<u32>,
    /// Letter multiplicities sorted decreasingly; the parts sum to `n`.
    pub content: Vec<u32>,
    pub size: u64,
}

fn multinomial(n: u32, parts: &[u32]) -> u64 {
    let mut result: u64 = 1;
    let mut seen = 0u32;
    for &p in parts {
        for k in 1..=p {
            seen += 1;
            result = result * seen as u64 / k as u64;
        }
    }
    debug_assert_eq!(seen, n);
    result
}

// a marked word keyed by (sorted letters, marks)
type OrbitKey = (Vec<Letter>, Vec<u32>);

fn orbits_from_letters(n: u32, items: Vec<(Vec<Letter>, Vec<u32>)>) -> Vec<Orbit> {
    // two words lie in one orbit iff they agree as multisets of letters
    let mut groups: BTreeMap<OrbitKey, Vec<Vec<Letter>>> = BTreeMap::new();
    for (alpha, marks) in items {
        let mut key = alpha.clone();
        key.sort();
        groups.entry((key, marks)).or_default().push(alpha);
    }
    let mut out = Vec::new();
    for ((sorted, marks), mut members) in groups {
        members.sort();
        let mut mult: BTreeMap<Letter, u32> = BTreeMap::new();
        for &a in &sorted {
            *mult.entry(a).or_insert(0) += 1;
        }
        let mut content: Vec<u32> = mult.values().copied().collect();
        content.sort_unstable_by(|a, b| b.cmp(a));
        let size = multinomial(n, &content);
        assert_eq!(size as usize, members.len(), "orbit size mismatch");
        out.push(Orbit {
            representative_alpha: members.remove(0),
            marks,
            content,
            size,
        });
    }
    out
}

/// Orbit decomposition of a set of codes under the positional action.
pub fn code_orbits(n: u32, codes: &[Code]) -> Vec<Orbit> {
    orbits_from_letters(
        n,
        codes
            .iter()
            .map(|c| {
                (
                    c.alpha.iter().map(|&a| Letter::Num(a)).collect(),
                    c.marks.clone(),
                )
            })
            .collect(),
    )
}

/// Orbit decomposition of a set of extended codes.
pub fn extended_code_orbits(n: u32, codes: &[ExtendedCode]) -> Vec<Orbit> {
    orbits_from_letters(
        n,
        codes.iter().map(|c| (c.alpha.clone(), c.marks.clone())).collect(),
    )
}
