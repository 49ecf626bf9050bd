//! Finite groups, permutations, group actions, semidirect products and
//! abelian gr-groups, all stored as dense index tables so that every axiom
//! can be checked exhaustively and exactly.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// A falsified law together with the first counterexample found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Name of the law that failed (e.g. "associativity").
    pub law: String,
    /// Indices of the elements witnessing the failure.
    pub witness: Vec<usize>,
    /// Human-readable elaboration of the failure.
    pub detail: String,
}

impl Violation {
    /// Builds a violation record for `law` at the given witness indices.
    pub fn new(law: impl Into<String>, witness: Vec<usize>, detail: impl Into<String>) -> Self {
        Violation { law: law.into(), witness, detail: detail.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.witness)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

impl std::error::Error for Violation {}

/// Structural errors raised while building an algebraic object.
#[derive(Debug, Error)]
pub enum BuildError {
    /// A table has the wrong dimensions or an out-of-range entry.
    #[error("malformed table: {0}")]
    Shape(String),
    /// A construction could not infer required data (identity, inverses, ...).
    #[error("inference failed: {0}")]
    Inference(String),
    /// A documented precondition of the construction does not hold.
    #[error("precondition violated: {0}")]
    Precondition(Violation),
}

/// A permutation of `0..n`, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    /// Identity permutation on `0..n`.
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// The transposition of adjacent slots `a` and `a+1` (0-based) in `0..n`.
    pub fn adjacent_swap(n: usize, a: usize) -> Self {
        assert!(a + 1 < n, "swap out of range");
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(a, a + 1);
        Perm(v)
    }

    /// Wraps an image array, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, BuildError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(BuildError::Shape("image array is not a bijection".into()));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Degree `n` of the permutation.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True when the permutation has degree 0 (vacuous).
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// Underlying image slice.
    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Left-to-right composite: `self` first, then `other` (i ↦ other(self(i))).
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "degree mismatch");
        Perm(self.0.iter().map(|&i| other.0[i]).collect())
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    /// True on the identity permutation.
    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Multiplicative order, via the lcm of the cycle lengths.
    pub fn order(&self) -> u128 {
        let mut seen = vec![false; self.len()];
        let mut ord: u128 = 1;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len: u128 = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            ord = num::integer::lcm(ord, len);
        }
        ord
    }
}

/// A finite group as a dense multiplication table over indices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    id: usize,
    inv: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Builds a group from a multiplication table, inferring the identity and
    /// inverses. Rejects malformed tables; associativity is left to `verify`.
    pub fn from_mul_table(
        mul: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, BuildError> {
        let order = mul.len();
        if order == 0 {
            return Err(BuildError::Shape("empty multiplication table".into()));
        }
        let mut flat = Vec::with_capacity(order * order);
        for row in &mul {
            if row.len() != order {
                return Err(BuildError::Shape("multiplication table is not square".into()));
            }
            for &v in row {
                if v >= order {
                    return Err(BuildError::Shape(format!("entry {v} out of range")));
                }
                flat.push(v);
            }
        }
        let id = (0..order)
            .find(|&e| (0..order).all(|a| flat[e * order + a] == a && flat[a * order + e] == a))
            .ok_or_else(|| BuildError::Inference("no two-sided identity".into()))?;
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            inv[a] = (0..order)
                .find(|&b| flat[a * order + b] == id && flat[b * order + a] == id)
                .ok_or_else(|| {
                    BuildError::Inference(format!("element {a} has no two-sided inverse"))
                })?;
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != order {
                    return Err(BuildError::Shape("label count differs from order".into()));
                }
                l
            }
            None => (0..order).map(|i| format!("g{i}")).collect(),
        };
        Ok(FiniteGroup { order, mul: flat, id, inv, labels })
    }

    /// The one-element group.
    pub fn trivial() -> Self {
        FiniteGroup { order: 1, mul: vec![0], id: 0, inv: vec![0], labels: vec!["e".into()] }
    }

    /// Cyclic group of order `n`, written additively: labels "0".."n-1".
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = (a + b) % n;
            }
        }
        FiniteGroup {
            order: n,
            mul,
            id: 0,
            inv: (0..n).map(|a| (n - a) % n).collect(),
            labels: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    /// Symmetric group on `n` letters (n ≤ 6), elements ordered
    /// lexicographically by image array, product `f·g = g∘f` (apply f first),
    /// labeled in 1-based cycle notation.
    pub fn symmetric(n: usize) -> Self {
        assert!((1..=6).contains(&n), "symmetric(n) supports 1 ≤ n ≤ 6");
        let perms = all_perms(n);
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let order = perms.len();
        let mut mul = vec![0; order * order];
        for (a, f) in perms.iter().enumerate() {
            for (b, g) in perms.iter().enumerate() {
                let fg: Vec<usize> = (0..n).map(|i| g[f[i]]).collect();
                mul[a * order + b] = index_of(&fg);
            }
        }
        let id = index_of(&(0..n).collect::<Vec<_>>());
        let mut inv = vec![0; order];
        for (a, f) in perms.iter().enumerate() {
            let mut fi = vec![0; n];
            for (i, &j) in f.iter().enumerate() {
                fi[j] = i;
            }
            inv[a] = index_of(&fi);
        }
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        FiniteGroup { order, mul, id, inv, labels }
    }

    /// Replaces the element labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, BuildError> {
        if labels.len() != self.order {
            return Err(BuildError::Shape("label count differs from order".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Product of `a` and `b` (in that written order).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    /// Identity element index.
    pub fn id(&self) -> usize {
        self.id
    }

    /// Inverse of `a`.
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// Display label of `a`.
    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    /// All display labels.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of the element with the given label, if any.
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Exhaustively checks associativity plus the inferred identity/inverses.
    pub fn verify(&self) -> Result<(), Violation> {
        let n = self.order;
        for a in 0..n {
            if self.mul(self.id, a) != a || self.mul(a, self.id) != a {
                return Err(Violation::new("identity", vec![a], "e·a ≠ a or a·e ≠ a"));
            }
            if self.mul(a, self.inv[a]) != self.id || self.mul(self.inv[a], a) != self.id {
                return Err(Violation::new("inverses", vec![a], "a·a⁻¹ ≠ e or a⁻¹·a ≠ e"));
            }
        }
        let found = crate::scan_range(n * n * n, |i| {
            let (a, rest) = (i / (n * n), i % (n * n));
            let (b, c) = (rest / n, rest % n);
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                Some(Violation::new(
                    "associativity",
                    vec![a, b, c],
                    format!(
                        "({}·{})·{} ≠ {}·({}·{})",
                        self.label(a),
                        self.label(b),
                        self.label(c),
                        self.label(a),
                        self.label(b),
                        self.label(c)
                    ),
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

    /// True when the group is commutative.
    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        crate::all_range(n * n, |i| {
            let (a, b) = (i / n, i % n);
            self.mul(a, b) == self.mul(b, a)
        })
    }

    /// `a` raised to an integer power (negative powers via the inverse).
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let (base, reps) = if k >= 0 { (a, k as u64) } else { (self.inv[a], (-k) as u64) };
        let mut acc = self.id;
        for _ in 0..reps {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// Order of the element `a`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut n = 1;
        while acc != self.id {
            acc = self.mul(acc, a);
            n += 1;
        }
        n
    }

    /// Conjugate `a b a⁻¹`.
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv[a])
    }

    /// Commutator `[p, q] = p q p⁻¹ q⁻¹`.
    pub fn commutator(&self, p: usize, q: usize) -> usize {
        self.mul(self.mul(self.mul(p, q), self.inv[p]), self.inv[q])
    }

    /// The subgroup on the given (distinct) element indices, with its induced
    /// table; also returns nothing new — elements keep their order of
    /// appearance in `elems`. Fails if the subset is not closed.
    pub fn subgroup(&self, elems: &[usize]) -> Result<(FiniteGroup, Vec<usize>), BuildError> {
        let pos = |x: usize| elems.iter().position(|&e| e == x);
        let k = elems.len();
        let mut mul = vec![vec![0usize; k]; k];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                mul[i][j] = pos(self.mul(a, b)).ok_or_else(|| {
                    BuildError::Shape(format!(
                        "subset not closed: {}·{} falls outside",
                        self.label(a),
                        self.label(b)
                    ))
                })?;
            }
        }
        let labels = elems.iter().map(|&a| self.labels[a].clone()).collect();
        Ok((FiniteGroup::from_mul_table(mul, Some(labels))?, elems.to_vec()))
    }
}

/// All permutations of `0..n` in lexicographic order of their image arrays.
fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// 1-based cycle notation for a permutation given by its image array.
fn cycle_notation(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut s = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        s.push('(');
        let mut i = start;
        loop {
            seen[i] = true;
            s.push_str(&(i + 1).to_string());
            i = p[i];
            if i == start {
                break;
            }
        }
        s.push(')');
    }
    if s.is_empty() {
        s.push('e');
    }
    s
}

/// A left action of a group (given by its order) on a finite set, as a dense
/// table `act[g][x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    actor_order: usize,
    space_size: usize,
    act: Vec<usize>,
}

impl GroupAction {
    /// Wraps an action table, checking shape only (axioms via `verify_action`).
    pub fn from_table(
        actor_order: usize,
        space_size: usize,
        table: Vec<Vec<usize>>,
    ) -> Result<Self, BuildError> {
        if table.len() != actor_order {
            return Err(BuildError::Shape("action table has wrong number of rows".into()));
        }
        let mut act = Vec::with_capacity(actor_order * space_size);
        for row in &table {
            if row.len() != space_size {
                return Err(BuildError::Shape("action table row has wrong length".into()));
            }
            for &v in row {
                if v >= space_size {
                    return Err(BuildError::Shape(format!("action value {v} out of range")));
                }
                act.push(v);
            }
        }
        Ok(GroupAction { actor_order, space_size, act })
    }

    /// The conjugation action of a group on itself: `g ▷ x = g x g⁻¹`.
    pub fn conjugation(group: &FiniteGroup) -> Self {
        let n = group.order();
        let mut act = vec![0; n * n];
        for g in 0..n {
            for x in 0..n {
                act[g * n + x] = group.conjugate(g, x);
            }
        }
        GroupAction { actor_order: n, space_size: n, act }
    }

    /// The trivial action.
    pub fn trivial(actor_order: usize, space_size: usize) -> Self {
        let mut act = Vec::with_capacity(actor_order * space_size);
        for _ in 0..actor_order {
            act.extend(0..space_size);
        }
        GroupAction { actor_order, space_size, act }
    }

    /// Order of the acting group.
    pub fn actor_order(&self) -> usize {
        self.actor_order
    }

    /// Size of the space acted on.
    pub fn space_size(&self) -> usize {
        self.space_size
    }

    /// Applies `g` to `x`.
    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.act[g * self.space_size + x]
    }

    /// Checks the left-action laws: identity acts trivially and
    /// `(g·h) ▷ x = g ▷ (h ▷ x)`.
    pub fn verify_action(&self, actor: &FiniteGroup) -> Result<(), Violation> {
        if actor.order() != self.actor_order {
            return Err(Violation::new("action/actor size", vec![], "order mismatch"));
        }
        let (n, m) = (self.actor_order, self.space_size);
        for x in 0..m {
            if self.apply(actor.id(), x) != x {
                return Err(Violation::new("action identity", vec![x], "e ▷ x ≠ x"));
            }
        }
        let found = crate::scan_range(n * n * m, |i| {
            let (g, rest) = (i / (n * m), i % (n * m));
            let (h, x) = (rest / m, rest % m);
            if self.apply(actor.mul(g, h), x) != self.apply(g, self.apply(h, x)) {
                Some(Violation::new("action compatibility", vec![g, h, x], "(g·h)▷x ≠ g▷(h▷x)"))
            } else {
                None
            }
        });
        match found {
            Some(v) => Err(v),
            None => Ok(()),
        }
    }

    /// Checks that every `g ▷ -` is an automorphism of `space`.
    pub fn verify_automorphism(
        &self,
        actor: &FiniteGroup,
        space: &FiniteGroup,
    ) -> Result<(), Violation> {
        if space.order() != self.space_size {
            return Err(Violation::new("action/space size", vec![], "order mismatch"));
        }
        let (n, m) = (actor.order(), space.order());
        let found = crate::scan_range(n * m * m, |i| {
            let (g, rest) = (i / (m * m), i % (m * m));
            let (x, y) = (rest / m, rest % m);
            if self.apply(g, space.mul(x, y)) != space.mul(self.apply(g, x), self.apply(g, y)) {
                Some(Violation::new(
                    "action by automorphisms",
                    vec![g, x, y],
                    "g▷(x·y) ≠ (g▷x)·(g▷y)",
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
}

/// Semidirect product `G ⋉ E` for a left action of `G` on `E` by
/// automorphisms: `(g,a)(h,b) = (g·h, a·(g ▷ b))`. Pairs are indexed as
/// `g·|E| + e`. The action is verified before the table is built.
pub fn semidirect_product(
    g: &FiniteGroup,
    e: &FiniteGroup,
    action: &GroupAction,
) -> Result<FiniteGroup, BuildError> {
    action.verify_action(g).map_err(BuildError::Precondition)?;
    action.verify_automorphism(g, e).map_err(BuildError::Precondition)?;
    let (ng, ne) = (g.order(), e.order());
    let order = ng * ne;
    let mut mul = vec![vec![0usize; order]; order];
    for g1 in 0..ng {
        for e1 in 0..ne {
            for g2 in 0..ng {
                for e2 in 0..ne {
                    let gp = g.mul(g1, g2);
                    let ep = e.mul(e1, action.apply(g1, e2));
                    mul[g1 * ne + e1][g2 * ne + e2] = gp * ne + ep;
                }
            }
        }
    }
    let labels = (0..order)
        .map(|i| format!("({},{})", g.label(i / ne), e.label(i % ne)))
        .collect();
    FiniteGroup::from_mul_table(mul, Some(labels))
}

/// Splits a semidirect-product index back into its `(g, e)` parts.
pub fn pair_split(idx: usize, e_order: usize) -> (usize, usize) {
    (idx / e_order, idx % e_order)
}

/// Joins `(g, e)` parts into a semidirect-product index.
pub fn pair_index(g: usize, e: usize, e_order: usize) -> usize {
    g * e_order + e
}

/// An abelian gr-group: a group `G` acting by automorphisms on an abelian
/// group `A`. Everything is validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGrGroup {
    g: FiniteGroup,
    a: FiniteGroup,
    action: GroupAction,
}

impl AbelianGrGroup {
    /// Bundles `(G, A, ▷)`, verifying both groups, abelianness of `A`, and
    /// the action laws.
    pub fn new(g: FiniteGroup, a: FiniteGroup, action: GroupAction) -> Result<Self, BuildError> {
        g.verify().map_err(BuildError::Precondition)?;
        a.verify().map_err(BuildError::Precondition)?;
        if !a.is_abelian() {
            return Err(BuildError::Precondition(Violation::new(
                "abelian coefficient group",
                vec![],
                "A is not abelian",
            )));
        }
        action.verify_action(&g).map_err(BuildError::Precondition)?;
        action.verify_automorphism(&g, &a).map_err(BuildError::Precondition)?;
        Ok(AbelianGrGroup { g, a, action })
    }

    /// The acting group `G`.
    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    /// The abelian group `A`.
    pub fn a(&self) -> &FiniteGroup {
        &self.a
    }

    /// The action of `G` on `A`.
    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    /// The semidirect product `G ⋉ A`.
    pub fn semidirect(&self) -> FiniteGroup {
        semidirect_product(&self.g, &self.a, &self.action)
            .expect("action validated at construction")
    }
}

/// Checks that an index map `dom → cod` is a group homomorphism.
pub fn verify_homomorphism(
    dom: &FiniteGroup,
    cod: &FiniteGroup,
    map: &[usize],
) -> Result<(), Violation> {
    if map.len() != dom.order() {
        return Err(Violation::new(
            "homomorphism shape",
            vec![map.len()],
            "map length differs from the domain order",
        ));
    }
    if let Some(&v) = map.iter().find(|&&v| v >= cod.order()) {
        return Err(Violation::new("homomorphism range", vec![v], "image out of range"));
    }
    let n = dom.order();
    let found = crate::scan_range(n * n, |i| {
        let (a, b) = (i / n, i % n);
        if map[dom.mul(a, b)] != cod.mul(map[a], map[b]) {
            Some(Violation::new("homomorphism", vec![a, b], "f(ab) ≠ f(a)f(b)"))
        } else {
            None
        }
    });
    match found {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

/// The full automorphism group of `g`, by brute force (intended for small
/// orders). Elements compose by function composition, `mul(f, h) = f∘h`, so
/// that evaluation is a left action. Returns the group together with each
/// automorphism's image map.
pub fn automorphism_group(g: &FiniteGroup) -> (FiniteGroup, Vec<Vec<usize>>) {
    let n = g.order();
    let mut autos: Vec<Vec<usize>> = Vec::new();
    for p in all_perms(n) {
        if p[g.id()] != g.id() {
            continue;
        }
        let hom = (0..n * n).all(|i| {
            let (a, b) = (i / n, i % n);
            p[g.mul(a, b)] == g.mul(p[a], p[b])
        });
        if hom {
            autos.push(p);
        }
    }
    let order = autos.len();
    let index_of = |p: &[usize]| autos.iter().position(|q| q == p).unwrap();
    let mut mul = vec![vec![0usize; order]; order];
    for (i, f) in autos.iter().enumerate() {
        for (j, h) in autos.iter().enumerate() {
            let fh: Vec<usize> = (0..n).map(|x| f[h[x]]).collect();
            mul[i][j] = index_of(&fh);
        }
    }
    let labels = (0..order).map(|i| format!("α{i}")).collect();
    let group = FiniteGroup::from_mul_table(mul, Some(labels)).expect("automorphism composition");
    (group, autos)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: one-line-notation permutation composition
    /// (apply `f` first, then `g`).
    fn compose_first_then(f: &[usize], g: &[usize]) -> Vec<usize> {
        (0..f.len()).map(|i| g[f[i]]).collect()
    }

    #[test]
    fn s3_matches_permutation_oracle() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        s3.verify().unwrap();
        assert!(!s3.is_abelian());
        // Rebuild the table independently from lexicographic one-line perms.
        let perms = super::all_perms(3);
        for (a, f) in perms.iter().enumerate() {
            for (b, g) in perms.iter().enumerate() {
                let expected = compose_first_then(f, g);
                let idx = perms.iter().position(|q| q == &expected).unwrap();
                assert_eq!(s3.mul(a, b), idx, "product {a}·{b}");
            }
        }
    }

    #[test]
    fn s3_frozen_products() {
        let s3 = FiniteGroup::symmetric(3);
        let p = s3.element_by_label("(12)").unwrap();
        let q = s3.element_by_label("(13)").unwrap();
        // Apply (12) first, then (13): 1↦2↦2, 2↦1↦... in cycle terms (123).
        assert_eq!(s3.label(s3.mul(p, q)), "(123)");
        assert_eq!(s3.label(s3.mul(q, p)), "(132)");
        assert_eq!(s3.label(s3.commutator(p, q)), "(132)");
        assert_eq!(s3.label(s3.conjugate(q, p)), "(23)");
        assert_eq!(s3.element_order(s3.element_by_label("(123)").unwrap()), 3);
        assert_eq!(s3.inv(p), p);
    }

    #[test]
    fn cyclic_groups() {
        for n in 1..8 {
            let z = FiniteGroup::cyclic(n);
            z.verify().unwrap();
            assert!(z.is_abelian());
            assert_eq!(z.id(), 0);
            assert_eq!(z.mul(n - 1, 1 % n), 0);
        }
        assert_eq!(FiniteGroup::cyclic(3).inv(1), 2);
    }

    #[test]
    fn broken_table_is_rejected_or_fails_verify() {
        // Corrupt one entry of Z₃: either inference or associativity must trip.
        let mut table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        table[1][1] = 1;
        match FiniteGroup::from_mul_table(table, None) {
            Err(_) => {}
            Ok(g) => assert!(g.verify().is_err()),
        }
    }

    #[test]
    fn conjugation_action_laws() {
        let s3 = FiniteGroup::symmetric(3);
        let act = GroupAction::conjugation(&s3);
        act.verify_action(&s3).unwrap();
        act.verify_automorphism(&s3, &s3).unwrap();
    }

    #[test]
    fn sign_action_on_z3() {
        // Z₂ = {1, -1} acting on Z₃ by sign.
        let z2 = FiniteGroup::cyclic(2)
            .with_labels(vec!["1".into(), "-1".into()])
            .unwrap();
        let z3 = FiniteGroup::cyclic(3);
        let act =
            GroupAction::from_table(2, 3, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        act.verify_action(&z2).unwrap();
        act.verify_automorphism(&z2, &z3).unwrap();
        let gr = AbelianGrGroup::new(z2, z3, act).unwrap();
        let sd = gr.semidirect();
        sd.verify().unwrap();
        assert_eq!(sd.order(), 6);
        assert!(!sd.is_abelian());
        // (-1,1)·(-1,1) = (1, 1 + (-1)▷1) = (1, 0).
        let i = pair_index(1, 1, 3);
        assert_eq!(sd.mul(i, i), pair_index(0, 0, 3));
        // Same element-order multiset as S₃: {1, 2, 2, 2, 3, 3}.
        let mut orders: Vec<usize> = (0..6).map(|x| sd.element_order(x)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn semidirect_with_trivial_action_is_direct_product() {
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        let sd = semidirect_product(&z2, &z3, &GroupAction::trivial(2, 3)).unwrap();
        sd.verify().unwrap();
        assert!(sd.is_abelian());
        assert_eq!(sd.element_order(pair_index(1, 1, 3)), 6);
    }

    #[test]
    fn automorphisms_of_s3() {
        let s3 = FiniteGroup::symmetric(3);
        let (aut, maps) = automorphism_group(&s3);
        aut.verify().unwrap();
        assert_eq!(aut.order(), 6);
        assert!(!aut.is_abelian());
        // Evaluation is a left action.
        let table: Vec<Vec<usize>> = maps.clone();
        let act = GroupAction::from_table(aut.order(), s3.order(), table).unwrap();
        act.verify_action(&aut).unwrap();
        act.verify_automorphism(&aut, &s3).unwrap();
    }

    #[test]
    fn automorphisms_of_z3() {
        let (aut, _) = automorphism_group(&FiniteGroup::cyclic(3));
        assert_eq!(aut.order(), 2);
    }

    #[test]
    fn subgroup_extraction() {
        let s3 = FiniteGroup::symmetric(3);
        let e = s3.id();
        let r = s3.element_by_label("(123)").unwrap();
        let r2 = s3.element_by_label("(132)").unwrap();
        let (sub, embed) = s3.subgroup(&[e, r, r2]).unwrap();
        sub.verify().unwrap();
        assert_eq!(sub.order(), 3);
        assert_eq!(embed.len(), 3);
        assert!(s3.subgroup(&[e, r]).is_err());
    }

    #[test]
    fn perm_basics() {
        let p = Perm::from_images(vec![1, 2, 0, 3]).unwrap();
        let q = Perm::adjacent_swap(4, 2);
        assert_eq!(p.then(&q).images(), &[1, 3, 0, 2]);
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.order(), 3);
        assert_eq!(q.order(), 2);
        assert_eq!(Perm::identity(5).order(), 1);
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
    }
}
