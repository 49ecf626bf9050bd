//! Biracks as dense tables: a set `0..size` with "over" and "under"
//! operations, the switch map, welded laws, essentiality, and the induced
//! action of braid words on tuples.

use crate::braid_engine::{BraidWord, Gen};
use crate::core_algebra::{BuildError, FiniteGroup, Perm, Violation};
use serde::{Deserialize, Serialize};

/// A birack structure on `0..size`. The tables are indexed so that
/// `over[x][y] = y/x` ("y over x") and `under[x][y] = x\y` ("x under y").
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Birack {
    size: usize,
    over: Vec<usize>,
    under: Vec<usize>,
}

/// Tri-state classification flags of a birack table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BirackClass {
    /// The birack axioms hold.
    pub is_birack: bool,
    /// The welded laws hold (checked only meaningfully when `is_birack`).
    pub is_welded: bool,
    /// Essentiality; `None` when the structure is not a welded birack.
    pub is_essential: Option<bool>,
}

impl Birack {
    /// Wraps over/under tables (shape check only; axioms via `verify`).
    pub fn new(size: usize, over: Vec<Vec<usize>>, under: Vec<Vec<usize>>) -> Result<Self, BuildError> {
        let flatten = |t: &[Vec<usize>], name: &str| -> Result<Vec<usize>, BuildError> {
            if t.len() != size {
                return Err(BuildError::Shape(format!("{name} table has wrong row count")));
            }
            let mut flat = Vec::with_capacity(size * size);
            for row in t {
                if row.len() != size {
                    return Err(BuildError::Shape(format!("{name} table is not square")));
                }
                for &v in row {
                    if v >= size {
                        return Err(BuildError::Shape(format!("{name} entry {v} out of range")));
                    }
                    flat.push(v);
                }
            }
            Ok(flat)
        };
        Ok(Birack { size, over: flatten(&over, "over")?, under: flatten(&under, "under")? })
    }

    /// Builds a birack directly from flat tables (internal constructors).
    pub(crate) fn from_flat(size: usize, over: Vec<usize>, under: Vec<usize>) -> Self {
        debug_assert_eq!(over.len(), size * size);
        debug_assert_eq!(under.len(), size * size);
        Birack { size, over, under }
    }

    /// The conjugation quandle of a group: `h/g = h`, `g\h = h⁻¹ g h`.
    pub fn conjugation_quandle(group: &FiniteGroup) -> Self {
        let n = group.order();
        let mut over = vec![0; n * n];
        let mut under = vec![0; n * n];
        for g in 0..n {
            for h in 0..n {
                over[g * n + h] = h;
                under[g * n + h] = group.conjugate(group.inv(h), g);
            }
        }
        Birack { size: n, over, under }
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        self.size
    }

    /// `y/x` — "y over x".
    pub fn over(&self, x: usize, y: usize) -> usize {
        self.over[x * self.size + y]
    }

    /// `x\y` — "x under y".
    pub fn under(&self, x: usize, y: usize) -> usize {
        self.under[x * self.size + y]
    }

    /// The switch `S(x, y) = (y/x, x\y)`.
    pub fn switch(&self, x: usize, y: usize) -> (usize, usize) {
        (self.over(x, y), self.under(x, y))
    }

    /// The switch as a permutation of `0..size²` (index `x·size + y`), or the
    /// violation if it is not bijective.
    pub fn switch_perm(&self) -> Result<Perm, Violation> {
        let n = self.size;
        let images = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                self.over(x, y) * n + self.under(x, y)
            })
            .collect();
        Perm::from_images(images)
            .map_err(|_| Violation::new("switch bijectivity", vec![], "S is not a bijection of X²"))
    }

    /// Exhaustively checks the birack axioms: the one-variable maps
    /// `x ↦ x/a` and `x ↦ x\a` are bijections, the switch is a bijection of
    /// X², and the set-theoretic braid relation `S₁∘S₂∘S₁ = S₂∘S₁∘S₂` holds.
    pub fn verify(&self) -> Result<(), Violation> {
        let n = self.size;
        // x ↦ x/a is row a of `over`; x ↦ x\a is column a of `under`.
        for a in 0..n {
            let mut seen = vec![false; n];
            for x in 0..n {
                let v = self.over(a, x);
                if seen[v] {
                    return Err(Violation::new("over invertibility", vec![a, x], "x ↦ x/a is not a bijection"));
                }
                seen[v] = true;
            }
            let mut seen = vec![false; n];
            for x in 0..n {
                let v = self.under(x, a);
                if seen[v] {
                    return Err(Violation::new("under invertibility", vec![a, x], "x ↦ x\\a is not a bijection"));
                }
                seen[v] = true;
            }
        }
        self.switch_perm()?;
        let s1 = |t: (usize, usize, usize)| {
            let (a, b) = self.switch(t.0, t.1);
            (a, b, t.2)
        };
        let s2 = |t: (usize, usize, usize)| {
            let (a, b) = self.switch(t.1, t.2);
            (t.0, a, b)
        };
        let found = crate::scan_range(n * n * n, |i| {
            let t = (i / (n * n), (i / n) % n, i % n);
            if s1(s2(s1(t))) != s2(s1(s2(t))) {
                Some(Violation::new(
                    "set-theoretic braid relation",
                    vec![t.0, t.1, t.2],
                    "S₁∘S₂∘S₁ ≠ S₂∘S₁∘S₂",
                ))
            } else {
                None
            }
        });
        match found {
            Some(v) => Err(v),
            None => Ok(()),
        }
    }

    /// Exhaustively checks the welded laws
    /// `(z/x)/y = (z/y)/x`, `y\z = y\(z/x)` and (redundantly) `x\z = x\(z/y)`.
    pub fn verify_welded(&self) -> Result<(), Violation> {
        let n = self.size;
        let found = crate::scan_range(n * n * n, |i| {
            let (x, y, z) = (i / (n * n), (i / n) % n, i % n);
            if self.over(y, self.over(x, z)) != self.over(x, self.over(y, z)) {
                return Some(Violation::new("welded over-over", vec![x, y, z], "(z/x)/y ≠ (z/y)/x"));
            }
            if self.under(y, z) != self.under(y, self.over(x, z)) {
                return Some(Violation::new("welded under-over", vec![x, y, z], "y\\z ≠ y\\(z/x)"));
            }
            if self.under(x, z) != self.under(x, self.over(y, z)) {
                return Some(Violation::new(
                    "welded under-over (redundant form)",
                    vec![x, y, z],
                    "x\\z ≠ x\\(z/y)",
                ));
            }
            None
        });
        match found {
            Some(v) => Err(v),
            None => Ok(()),
        }
    }

    /// Essentiality scan. A welded birack is essential when it does NOT hold
    /// that for all x, y, z: `(x\y)\z = (x\z)\y`, `y/x = y/(x\z)` and
    /// `z/(x\y) = z/x`. Returns the witness triple where the law fails
    /// (`Some` = essential), or `None` (not essential).
    pub fn essentiality(&self) -> Option<Violation> {
        let n = self.size;
        crate::scan_range(n * n * n, |i| {
            let (x, y, z) = (i / (n * n), (i / n) % n, i % n);
            if self.under(self.under(x, y), z) != self.under(self.under(x, z), y) {
                return Some(Violation::new(
                    "essential witness",
                    vec![x, y, z],
                    "(x\\y)\\z ≠ (x\\z)\\y",
                ));
            }
            if self.over(x, y) != self.over(self.under(x, z), y) {
                return Some(Violation::new("essential witness", vec![x, y, z], "y/x ≠ y/(x\\z)"));
            }
            if self.over(self.under(x, y), z) != self.over(x, z) {
                return Some(Violation::new("essential witness", vec![x, y, z], "z/(x\\y) ≠ z/x"));
            }
            None
        })
    }

    /// Computes the tri-state classification flags.
    pub fn classify(&self) -> BirackClass {
        let is_birack = self.verify().is_ok();
        let is_welded = is_birack && self.verify_welded().is_ok();
        BirackClass {
            is_birack,
            is_welded,
            is_essential: if is_welded { Some(self.essentiality().is_some()) } else { None },
        }
    }
}

/// Acts with a braid word on a tuple of birack elements: `S⁺_a` sends the
/// pair at slots (a, a+1) to `(x_{a+1}/x_a, x_a\x_{a+1})`, `V_a` swaps them,
/// and `S⁻_a` applies the inverse of the switch.
pub fn act_tuple(b: &Birack, word: &BraidWord, tuple: &[usize]) -> Result<Vec<usize>, Violation> {
    if tuple.len() != word.strands() {
        return Err(Violation::new(
            "tuple length",
            vec![tuple.len(), word.strands()],
            "tuple length differs from the word's strand count",
        ));
    }
    if let Some(&v) = tuple.iter().find(|&&v| v >= b.size()) {
        return Err(Violation::new("tuple range", vec![v], "tuple entry out of range"));
    }
    let mut cur = tuple.to_vec();
    let mut switch_inv: Option<Perm> = None;
    for gen in word.tokens() {
        match *gen {
            Gen::SPlus(a) => {
                let (x, y) = (cur[a - 1], cur[a]);
                let (o, u) = b.switch(x, y);
                cur[a - 1] = o;
                cur[a] = u;
            }
            Gen::SMinus(a) => {
                let inv = match &switch_inv {
                    Some(p) => p,
                    None => {
                        let p = b.switch_perm()?.inverse();
                        switch_inv = Some(p);
                        switch_inv.as_ref().unwrap()
                    }
                };
                let (x, y) = (cur[a - 1], cur[a]);
                let pre = inv.apply(x * b.size() + y);
                cur[a - 1] = pre / b.size();
                cur[a] = pre % b.size();
            }
            Gen::V(a) => cur.swap(a - 1, a),
        }
    }
    Ok(cur)
}
