//! Groupoid algebras over exact rational scalars: sparse tensor elements and
//! their *-structure, regular and object-regular representations, the
//! R-element of a bikoid with its algebraic identities, a quantum-double
//! sanity check, and exact sparse linear operators.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num::{BigInt, BigRational, One, Zero};

use crate::bikoid::Bikoid;
use crate::core_algebra::{BuildError, FiniteGroup, Perm, Violation};
use crate::groupoid::{action_arrow, aut_groupoid, wreath_inverse, Groupoid};

/// Exact scalar type used everywhere: arbitrary-precision rationals.
pub type Scalar = BigRational;

fn one() -> Scalar {
    Scalar::one()
}

/// Renders a scalar as `p/q` (always with an explicit denominator).
pub fn scalar_string(v: &Scalar) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

/// Parses `p/q` or a bare integer.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let mut parts = s.splitn(2, '/');
    let numer: BigInt = parts.next()?.trim().parse().ok()?;
    let denom: BigInt = match parts.next() {
        Some(d) => d.trim().parse().ok()?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return None;
    }
    Some(Scalar::new(numer, denom))
}

/// A sparse exact matrix, stored column-major with rows sorted inside each
/// column and no explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    cols_data: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMatrix {
    /// The zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, cols_data: vec![Vec::new(); cols] }
    }

    /// The identity matrix.
    pub fn identity(n: usize) -> Self {
        let cols_data = (0..n).map(|j| vec![(j, one())]).collect();
        SparseMatrix { rows: n, cols: n, cols_data }
    }

    /// Builds from coordinate entries, merging duplicates and dropping zeros.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self, BuildError> {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(BuildError::Shape(format!("entry ({r},{c}) out of range")));
            }
            let slot = acc[c].entry(r).or_insert_with(Scalar::zero);
            *slot += v;
        }
        let cols_data = acc
            .into_iter()
            .map(|col| col.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Ok(SparseMatrix { rows, cols, cols_data })
    }

    /// The permutation matrix of `p` (maps `e_i` to `e_{p(i)}`).
    pub fn from_perm(p: &Perm) -> Self {
        let n = p.len();
        let cols_data = (0..n).map(|j| vec![(p.apply(j), one())]).collect();
        SparseMatrix { rows: n, cols: n, cols_data }
    }

    /// The factor-swap operator `e_i ⊗ e_j ↦ e_j ⊗ e_i` between spaces of
    /// dimensions `d1` and `d2`.
    pub fn swap(d1: usize, d2: usize) -> Self {
        let mut cols_data = vec![Vec::new(); d1 * d2];
        for i in 0..d1 {
            for j in 0..d2 {
                cols_data[i * d2 + j].push((j * d1 + i, one()));
            }
        }
        SparseMatrix { rows: d1 * d2, cols: d1 * d2, cols_data }
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of stored entries.
    pub fn nnz(&self) -> usize {
        self.cols_data.iter().map(Vec::len).sum()
    }

    /// Iterates the stored entries as `(row, col, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.cols_data
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    /// The entry at `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.cols_data[c]
            .iter()
            .find(|(row, _)| *row == r)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Scalar::zero)
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix, Violation> {
        if self.cols != other.rows {
            return Err(Violation::new(
                "matrix dimensions",
                vec![self.cols, other.rows],
                "inner dimensions differ",
            ));
        }
        let mut cols_data = Vec::with_capacity(other.cols);
        for bcol in &other.cols_data {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, bv) in bcol {
                for (i, av) in &self.cols_data[*k] {
                    let slot = acc.entry(*i).or_insert_with(Scalar::zero);
                    *slot += av * bv;
                }
            }
            cols_data.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Ok(SparseMatrix { rows: self.rows, cols: other.cols, cols_data })
    }

    /// Transpose.
    pub fn transpose(&self) -> SparseMatrix {
        let mut cols_data = vec![Vec::new(); self.rows];
        for (r, c, v) in self.entries() {
            cols_data[r].push((c, v.clone()));
        }
        for col in &mut cols_data {
            col.sort_by_key(|(r, _)| *r);
        }
        SparseMatrix { rows: self.cols, cols: self.rows, cols_data }
    }

    /// Kronecker product, with indices paired as `i₁·dim₂ + i₂`.
    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut cols_data = vec![Vec::new(); cols];
        for (r1, c1, v1) in self.entries() {
            for (r2, c2, v2) in other.entries() {
                cols_data[c1 * other.cols + c2].push((r1 * other.rows + r2, v1 * v2));
            }
        }
        for col in &mut cols_data {
            col.sort_by_key(|(r, _)| *r);
        }
        SparseMatrix { rows, cols, cols_data }
    }

    /// True when this is exactly the identity.
    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.cols_data.iter().enumerate().all(|(j, col)| {
                col.len() == 1 && col[0].0 == j && col[0].1.is_one()
            })
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.cols_data.iter().all(Vec::is_empty)
    }

    /// Extracts permutation structure: square, every column a single unit
    /// entry, rows pairwise distinct.
    pub fn is_permutation(&self) -> Option<Perm> {
        if self.rows != self.cols {
            return None;
        }
        let mut images = Vec::with_capacity(self.cols);
        for col in &self.cols_data {
            if col.len() != 1 || !col[0].1.is_one() {
                return None;
            }
            images.push(col[0].0);
        }
        Perm::from_images(images).ok()
    }

    /// When every column holds at most one unit entry, the matrix acts as a
    /// partial map on basis vectors; returns that map.
    pub fn partial_map(&self) -> Option<Vec<Option<usize>>> {
        let mut map = Vec::with_capacity(self.cols);
        for col in &self.cols_data {
            match col.len() {
                0 => map.push(None),
                1 if col[0].1.is_one() => map.push(Some(col[0].0)),
                _ => return None,
            }
        }
        Some(map)
    }
}

/// JSON export: a coordinate list `[{"r":…,"c":…,"v":"p/q"},…]` wrapped with
/// the dimensions.
pub fn export_json(m: &SparseMatrix) -> String {
    let entries: Vec<serde_json::Value> = m
        .entries()
        .map(|(r, c, v)| {
            serde_json::json!({ "r": r, "c": c, "v": scalar_string(v) })
        })
        .collect();
    serde_json::json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries }).to_string()
}

/// Plain-text export: a header line `rows cols` then one `r c p/q` triplet
/// per line.
pub fn export_text(m: &SparseMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for (r, c, v) in m.entries() {
        out.push_str(&format!("{} {} {}\n", r, c, scalar_string(v)));
    }
    out
}

/// The multiplicative order of an operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorOrder {
    /// Least `k ≥ 1` with the k-th power equal to the identity.
    Finite(u128),
    /// No identity power found within the search bound.
    ExceedsBound(u64),
}

impl std::fmt::Display for OperatorOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OperatorOrder::Finite(k) => write!(f, "{k}"),
            OperatorOrder::ExceedsBound(b) => write!(f, "exceeds bound {b}"),
        }
    }
}

/// Exact rank by fraction-free Gaussian elimination (small matrices only).
fn dense_rank(m: &SparseMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = vec![vec![Scalar::zero(); cols]; rows];
    for (r, c, v) in m.entries() {
        a[r][c] = v.clone();
    }
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| !a[r][col].is_zero());
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        let inv = a[rank][col].clone();
        for r in rank + 1..rows {
            if !a[r][col].is_zero() {
                let factor = &a[r][col] / &inv;
                for c in col..cols {
                    let sub = &factor * &a[rank][c];
                    a[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Multiplicative order of a square operator: cycle-structure lcm when the
/// matrix is a permutation, otherwise iterated multiplication up to `bound`.
/// Matrices of dimension ≤ 256 are first checked for invertibility exactly;
/// larger non-permutation matrices skip that check and rely on the bound.
pub fn operator_order(m: &SparseMatrix, bound: u64) -> Result<OperatorOrder, Violation> {
    if m.rows() != m.cols() {
        return Err(Violation::new(
            "operator order",
            vec![m.rows(), m.cols()],
            "operator is not square",
        ));
    }
    if let Some(p) = m.is_permutation() {
        return Ok(OperatorOrder::Finite(p.order()));
    }
    if m.rows() <= 256 && dense_rank(m) < m.rows() {
        return Err(Violation::new("operator order", vec![], "operator is not invertible"));
    }
    let mut power = m.clone();
    for k in 1..=bound {
        if power.is_identity() {
            return Ok(OperatorOrder::Finite(u128::from(k)));
        }
        power = power.mul(m)?;
    }
    Ok(OperatorOrder::ExceedsBound(bound))
}

/// A sparse formal sum over tuples of morphisms: an element of the k-fold
/// tensor power of the groupoid algebra.
#[derive(Debug, Clone)]
pub struct TensorElement {
    groupoid: Arc<Groupoid>,
    factors: usize,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors && self.terms == other.terms
    }
}

impl TensorElement {
    /// The zero element.
    pub fn zero(groupoid: Arc<Groupoid>, factors: usize) -> Self {
        TensorElement { groupoid, factors, terms: BTreeMap::new() }
    }

    /// The algebra unit `(Σ_x id_x)^{⊗factors}`: one term per object tuple.
    pub fn unit(groupoid: Arc<Groupoid>, factors: usize) -> Self {
        let n = groupoid.objects();
        let mut el = TensorElement::zero(groupoid, factors);
        let count = n.pow(factors as u32);
        for mut i in 0..count {
            let mut key = vec![0usize; factors];
            for slot in key.iter_mut().rev() {
                *slot = el.groupoid.identity(i % n);
                i /= n;
            }
            el.terms.insert(key, one());
        }
        el
    }

    /// A single basis tensor with coefficient 1.
    pub fn single(groupoid: Arc<Groupoid>, arrows: Vec<usize>) -> Result<Self, BuildError> {
        if let Some(&a) = arrows.iter().find(|&&a| a >= groupoid.morphisms()) {
            return Err(BuildError::Shape(format!("morphism index {a} out of range")));
        }
        let factors = arrows.len();
        let mut terms = BTreeMap::new();
        terms.insert(arrows, one());
        Ok(TensorElement { groupoid, factors, terms })
    }

    /// Number of tensor factors.
    pub fn factors(&self) -> usize {
        self.factors
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterates the stored terms.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> + '_ {
        self.terms.iter()
    }

    /// Adds a term in place, dropping it again if the coefficient cancels.
    pub fn add_term(&mut self, key: Vec<usize>, coeff: Scalar) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(slot) => {
                if !coeff.is_zero() {
                    slot.insert(coeff);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Sum of two elements.
    pub fn add(&self, other: &TensorElement) -> Result<TensorElement, Violation> {
        if self.factors != other.factors {
            return Err(Violation::new("tensor addition", vec![], "factor counts differ"));
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    /// Scales by an exact scalar.
    pub fn scale(&self, s: &Scalar) -> TensorElement {
        if s.is_zero() {
            return TensorElement::zero(Arc::clone(&self.groupoid), self.factors);
        }
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * s)).collect();
        TensorElement { groupoid: Arc::clone(&self.groupoid), factors: self.factors, terms }
    }

    /// Algebra product: factor-wise arrow composition, with a term killed by
    /// any endpoint mismatch. Terms of `other` are joined by source tuple so
    /// the cost stays proportional to the matching pairs.
    pub fn mul(&self, other: &TensorElement) -> Result<TensorElement, Violation> {
        if self.factors != other.factors {
            return Err(Violation::new("tensor product", vec![], "factor counts differ"));
        }
        let g = self.groupoid.as_ref();
        let mut by_src: HashMap<Vec<usize>, Vec<(&Vec<usize>, &Scalar)>> = HashMap::new();
        for (k, v) in &other.terms {
            let src: Vec<usize> = k.iter().map(|&m| g.src(m)).collect();
            by_src.entry(src).or_default().push((k, v));
        }
        let mut out = TensorElement::zero(Arc::clone(&self.groupoid), self.factors);
        for (k, v) in &self.terms {
            let tgt: Vec<usize> = k.iter().map(|&m| g.tgt(m)).collect();
            let Some(matches) = by_src.get(&tgt) else { continue };
            for (k2, v2) in matches {
                let composed: Vec<usize> = k
                    .iter()
                    .zip(k2.iter())
                    .map(|(&a, &b)| g.compose(a, b).expect("sources matched targets"))
                    .collect();
                out.add_term(composed, v * *v2);
            }
        }
        Ok(out)
    }

    /// The *-involution: factor-wise arrow inverse (rational coefficients are
    /// their own conjugates).
    pub fn star(&self) -> TensorElement {
        let g = self.groupoid.as_ref();
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.iter().map(|&m| g.inverse(m)).collect(), v.clone()))
            .collect();
        TensorElement { groupoid: Arc::clone(&self.groupoid), factors: self.factors, terms }
    }

    /// Embeds into a larger tensor power by tensoring identities onto the
    /// positions not listed; `positions` must be strictly increasing.
    pub fn embed(&self, total: usize, positions: &[usize]) -> Result<TensorElement, Violation> {
        if positions.len() != self.factors
            || positions.windows(2).any(|w| w[0] >= w[1])
            || positions.iter().any(|&p| p >= total)
        {
            return Err(Violation::new("tensor embedding", vec![], "bad position list"));
        }
        let g = self.groupoid.as_ref();
        let n = g.objects();
        let free: Vec<usize> = (0..total).filter(|p| !positions.contains(p)).collect();
        let fill_count = n.pow(free.len() as u32);
        let mut out = TensorElement::zero(Arc::clone(&self.groupoid), total);
        for (k, v) in &self.terms {
            for mut fill in 0..fill_count {
                let mut key = vec![0usize; total];
                for (slot, &m) in positions.iter().zip(k.iter()) {
                    key[*slot] = m;
                }
                for &p in free.iter().rev() {
                    key[p] = g.identity(fill % n);
                    fill /= n;
                }
                out.add_term(key, v.clone());
            }
        }
        Ok(out)
    }
}

/// The R-element of a bikoid: `Σ_{x,y} L(x,y) ⊗ R(x,y)`, one unit term per
/// object pair.
pub fn r_element(bk: &Bikoid) -> TensorElement {
    let n = bk.groupoid().objects();
    let mut el = TensorElement::zero(bk.groupoid_arc(), 2);
    for x in 0..n {
        for y in 0..n {
            el.add_term(vec![bk.l(x, y), bk.r(x, y)], one());
        }
    }
    el
}

/// The inverse R-element: the term at the switched pair is the factor-wise
/// inverse of the original crossing, `Σ_{x,y} L(x,y)⁻¹ ⊗ R(x,y)⁻¹`. Each term
/// is cross-checked against the strand arrows of the inverse crossing.
pub fn r_inverse(bk: &Bikoid) -> Result<TensorElement, Violation> {
    let g = bk.groupoid();
    let n = g.objects();
    let lower = bk.lower_birack();
    let mut el = TensorElement::zero(bk.groupoid_arc(), 2);
    for x in 0..n {
        for y in 0..n {
            let l_inv = g.inverse(bk.l(x, y));
            let r_inv = g.inverse(bk.r(x, y));
            // Independent route: the inverse crossing at the switched pair
            // carries the same two arrows on its strands.
            let wm = wreath_inverse(g, &bk.x_plus(x, y));
            let (u, v) = (lower.over(x, y), lower.under(x, y));
            let from_wreath = bk.x_minus(u, v)?;
            if wm != from_wreath || wm.arrows != vec![r_inv, l_inv] {
                return Err(Violation::new(
                    "inverse crossing arrows",
                    vec![x, y],
                    "factor-wise inverses disagree with the inverse crossing",
                ));
            }
            el.add_term(vec![l_inv, r_inv], one());
        }
    }
    Ok(el)
}

/// Checks `r·r⁻¹ = 1⊗1 = r⁻¹·r` exactly in the tensor algebra.
pub fn check_r_invertible(bk: &Bikoid) -> Result<(), Violation> {
    let r = r_element(bk);
    let ri = r_inverse(bk)?;
    let unit = TensorElement::unit(bk.groupoid_arc(), 2);
    if r.mul(&ri)? != unit {
        return Err(Violation::new("R-element inverse", vec![], "r·r⁻¹ ≠ 1⊗1"));
    }
    if ri.mul(&r)? != unit {
        return Err(Violation::new("R-element inverse", vec![], "r⁻¹·r ≠ 1⊗1"));
    }
    Ok(())
}

/// Checks the Yang–Baxter identity `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` exactly in the
/// threefold tensor algebra.
pub fn check_ybe(bk: &Bikoid) -> Result<(), Violation> {
    let r = r_element(bk);
    let r12 = r.embed(3, &[0, 1])?;
    let r13 = r.embed(3, &[0, 2])?;
    let r23 = r.embed(3, &[1, 2])?;
    let lhs = r12.mul(&r13)?.mul(&r23)?;
    let rhs = r23.mul(&r13)?.mul(&r12)?;
    if lhs != rhs {
        return Err(Violation::new("Yang-Baxter identity", vec![], "R₁₂R₁₃R₂₃ ≠ R₂₃R₁₃R₁₂"));
    }
    Ok(())
}

/// Checks the commutation `R₁₃R₂₃ = R₂₃R₁₃` that characterizes welded
/// bikoids at the R-element level.
pub fn check_welded_r(bk: &Bikoid) -> Result<(), Violation> {
    let r = r_element(bk);
    let r13 = r.embed(3, &[0, 2])?;
    let r23 = r.embed(3, &[1, 2])?;
    if r13.mul(&r23)? != r23.mul(&r13)? {
        return Err(Violation::new("welded commutation", vec![], "R₁₃R₂₃ ≠ R₂₃R₁₃"));
    }
    Ok(())
}

/// Which basis a representation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepKind {
    /// Basis: all morphisms; action by right composition.
    RightRegular,
    /// Basis: all objects; an arrow sends its source to its target.
    ObjectRegular,
    /// User-supplied matrices.
    Custom,
}

impl RepKind {
    /// Catalog-facing name.
    pub fn name(self) -> &'static str {
        match self {
            RepKind::RightRegular => "right-regular",
            RepKind::ObjectRegular => "object-regular",
            RepKind::Custom => "custom",
        }
    }
}

/// A representation of the groupoid algebra: one exact operator per
/// morphism.
#[derive(Debug, Clone)]
pub struct Representation {
    groupoid: Arc<Groupoid>,
    kind: RepKind,
    dim: usize,
    matrices: Vec<SparseMatrix>,
}

impl Representation {
    /// The right regular representation on the morphism basis: the operator
    /// of `δ` sends `e_γ` to `e_{γ⋆δ}` when composable and kills it
    /// otherwise.
    pub fn right_regular(groupoid: Arc<Groupoid>) -> Self {
        let m = groupoid.morphisms();
        let matrices = (0..m)
            .map(|delta| {
                let entries = (0..m).filter_map(|gamma| {
                    groupoid.compose(gamma, delta).map(|c| (c, gamma, one()))
                });
                SparseMatrix::from_entries(m, m, entries).expect("indices in range")
            })
            .collect();
        Representation { dim: m, groupoid, kind: RepKind::RightRegular, matrices }
    }

    /// The object regular representation on the object basis: the operator
    /// of `γ` sends `e_{src γ}` to `e_{tgt γ}` and kills other objects.
    pub fn object_regular(groupoid: Arc<Groupoid>) -> Self {
        let n = groupoid.objects();
        let matrices = (0..groupoid.morphisms())
            .map(|gamma| {
                let entry = (groupoid.tgt(gamma), groupoid.src(gamma), one());
                SparseMatrix::from_entries(n, n, [entry]).expect("indices in range")
            })
            .collect();
        Representation { dim: n, groupoid, kind: RepKind::ObjectRegular, matrices }
    }

    /// Wraps user-supplied matrices, checking shapes only.
    pub fn from_matrices(
        groupoid: Arc<Groupoid>,
        dim: usize,
        matrices: Vec<SparseMatrix>,
    ) -> Result<Self, BuildError> {
        if matrices.len() != groupoid.morphisms() {
            return Err(BuildError::Shape("one matrix per morphism required".into()));
        }
        if matrices.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(BuildError::Shape("matrix dimensions differ from dim".into()));
        }
        Ok(Representation { groupoid, kind: RepKind::Custom, dim, matrices })
    }

    /// The underlying groupoid.
    pub fn groupoid(&self) -> &Groupoid {
        &self.groupoid
    }

    /// Shared handle to the groupoid.
    pub fn groupoid_arc(&self) -> Arc<Groupoid> {
        Arc::clone(&self.groupoid)
    }

    /// Which construction produced this representation.
    pub fn kind(&self) -> RepKind {
        self.kind
    }

    /// Dimension of the module.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The operator of a morphism.
    pub fn matrix(&self, m: usize) -> &SparseMatrix {
        &self.matrices[m]
    }

    /// Checks multiplicativity — the operator of `γ` followed by the operator
    /// of `δ` equals the operator of `γ⋆δ` when composable and the zero
    /// operator otherwise — plus the unit identity `Σ_x op(id_x) = I`. Uses a
    /// partial-permutation fast path when every matrix is 0/1 with at most
    /// one entry per column.
    pub fn verify(&self) -> Result<(), Violation> {
        let g = self.groupoid.as_ref();
        let m = g.morphisms();
        let maps: Option<Vec<Vec<Option<usize>>>> =
            self.matrices.iter().map(SparseMatrix::partial_map).collect();
        if let Some(maps) = maps {
            if let Some(v) = crate::scan_range(m * m, |i| {
                let (gamma, delta) = (i / m, i % m);
                let composed = g.compose(gamma, delta);
                let chain = |col: usize| maps[gamma][col].and_then(|mid| maps[delta][mid]);
                for col in 0..self.dim {
                    let expect = composed.and_then(|c| maps[c][col]);
                    if chain(col) != expect {
                        return Some(Violation::new(
                            "representation multiplicativity",
                            vec![gamma, delta, col],
                            "op(δ)∘op(γ) differs from op(γ⋆δ)",
                        ));
                    }
                }
                None
            }) {
                return Err(v);
            }
        } else {
            for gamma in 0..m {
                for delta in 0..m {
                    let product = self.matrices[delta].mul(&self.matrices[gamma])?;
                    let ok = match g.compose(gamma, delta) {
                        Some(c) => product == self.matrices[c],
                        None => product.is_zero(),
                    };
                    if !ok {
                        return Err(Violation::new(
                            "representation multiplicativity",
                            vec![gamma, delta],
                            "op(δ)∘op(γ) differs from op(γ⋆δ)",
                        ));
                    }
                }
            }
        }
        let mut unit_entries = Vec::new();
        for x in 0..g.objects() {
            unit_entries.extend(
                self.matrices[g.identity(x)].entries().map(|(r, c, v)| (r, c, v.clone())),
            );
        }
        let unit = SparseMatrix::from_entries(self.dim, self.dim, unit_entries)
            .expect("identity matrices are in range");
        if !unit.is_identity() {
            return Err(Violation::new(
                "representation unit",
                vec![],
                "Σ_x op(id_x) is not the identity",
            ));
        }
        Ok(())
    }

    /// Checks unitarity w.r.t. the orthonormal basis: the operator of `γ⁻¹`
    /// is the transpose of the operator of `γ`.
    pub fn verify_unitary(&self) -> Result<(), Violation> {
        let g = self.groupoid.as_ref();
        for gamma in 0..g.morphisms() {
            if self.matrices[g.inverse(gamma)] != self.matrices[gamma].transpose() {
                return Err(Violation::new(
                    "unitarity",
                    vec![gamma],
                    "op(γ⁻¹) is not the adjoint of op(γ)",
                ));
            }
        }
        Ok(())
    }
}

/// The quantum double of a finite group, realized on the conjugation action
/// groupoid: coproduct, counit, antipode, and the R-matrix.
#[derive(Debug, Clone)]
pub struct QuantumDouble {
    group: FiniteGroup,
    groupoid: Arc<Groupoid>,
}

impl QuantumDouble {
    /// Builds the double of `group`.
    pub fn new(group: &FiniteGroup) -> Self {
        let groupoid = Arc::new(aut_groupoid(group));
        QuantumDouble { group: group.clone(), groupoid }
    }

    /// The underlying groupoid.
    pub fn groupoid_arc(&self) -> Arc<Groupoid> {
        Arc::clone(&self.groupoid)
    }

    /// The arrow `(x →g g·x·g⁻¹)` as a morphism index.
    pub fn arrow(&self, x: usize, g: usize) -> usize {
        action_arrow(x, g, self.group.order())
    }

    /// Coproduct on a basis arrow: `Δ(x →g) = Σ_{y·z = x} (y →g) ⊗ (z →g)`.
    pub fn coproduct(&self, m: usize) -> TensorElement {
        let n = self.group.order();
        let (x, g) = crate::groupoid::action_arrow_parts(m, n);
        let mut el = TensorElement::zero(Arc::clone(&self.groupoid), 2);
        for y in 0..n {
            // z = y⁻¹·x
            let z = self.group.mul(self.group.inv(y), x);
            el.add_term(vec![self.arrow(y, g), self.arrow(z, g)], one());
        }
        el
    }

    /// Counit on a basis arrow: 1 when the base point is the group identity.
    pub fn counit(&self, m: usize) -> Scalar {
        let (x, _) = crate::groupoid::action_arrow_parts(m, self.group.order());
        if x == self.group.id() {
            one()
        } else {
            Scalar::zero()
        }
    }

    /// Antipode on a basis arrow: `S(x →g) = (g·x⁻¹·g⁻¹ →g⁻¹)`.
    pub fn antipode(&self, m: usize) -> usize {
        let n = self.group.order();
        let (x, g) = crate::groupoid::action_arrow_parts(m, n);
        self.arrow(self.group.conjugate(g, self.group.inv(x)), self.group.inv(g))
    }

    /// The R-matrix `Σ_{g,h} (g →h⁻¹) ⊗ (h →1)`.
    pub fn r_matrix(&self) -> TensorElement {
        let n = self.group.order();
        let mut el = TensorElement::zero(Arc::clone(&self.groupoid), 2);
        for g in 0..n {
            for h in 0..n {
                el.add_term(
                    vec![self.arrow(g, self.group.inv(h)), self.arrow(h, self.group.id())],
                    one(),
                );
            }
        }
        el
    }

    /// Exhaustively checks coassociativity, the counit laws, and the antipode
    /// laws on every basis arrow.
    pub fn verify(&self) -> Result<(), Violation> {
        let g = self.groupoid.as_ref();
        let unit = TensorElement::unit(Arc::clone(&self.groupoid), 1);
        for m in 0..g.morphisms() {
            let delta = self.coproduct(m);
            // Coassociativity: apply Δ to each side of every term.
            let mut lhs = TensorElement::zero(Arc::clone(&self.groupoid), 3);
            let mut rhs = TensorElement::zero(Arc::clone(&self.groupoid), 3);
            for (key, coeff) in delta.terms() {
                let (m1, m2) = (key[0], key[1]);
                for (k1, c1) in self.coproduct(m1).terms() {
                    lhs.add_term(vec![k1[0], k1[1], m2], coeff * c1);
                }
                for (k2, c2) in self.coproduct(m2).terms() {
                    rhs.add_term(vec![m1, k2[0], k2[1]], coeff * c2);
                }
            }
            if lhs != rhs {
                return Err(Violation::new("coassociativity", vec![m], "(Δ⊗id)Δ ≠ (id⊗Δ)Δ"));
            }
            // Counit: (ε⊗id)Δ = id = (id⊗ε)Δ.
            let mut left = TensorElement::zero(Arc::clone(&self.groupoid), 1);
            let mut right = TensorElement::zero(Arc::clone(&self.groupoid), 1);
            for (key, coeff) in delta.terms() {
                left.add_term(vec![key[1]], coeff * self.counit(key[0]));
                right.add_term(vec![key[0]], coeff * self.counit(key[1]));
            }
            let single = TensorElement::single(Arc::clone(&self.groupoid), vec![m])
                .expect("basis arrow in range");
            if left != single || right != single {
                return Err(Violation::new("counit law", vec![m], "(ε⊗id)Δ ≠ id or (id⊗ε)Δ ≠ id"));
            }
            // Antipode: μ(S⊗id)Δ = ε·1 = μ(id⊗S)Δ.
            let mut anti_l = TensorElement::zero(Arc::clone(&self.groupoid), 1);
            let mut anti_r = TensorElement::zero(Arc::clone(&self.groupoid), 1);
            for (key, coeff) in delta.terms() {
                if let Some(c) = g.compose(self.antipode(key[0]), key[1]) {
                    anti_l.add_term(vec![c], coeff.clone());
                }
                if let Some(c) = g.compose(key[0], self.antipode(key[1])) {
                    anti_r.add_term(vec![c], coeff.clone());
                }
            }
            let expected = unit.scale(&self.counit(m));
            if anti_l != expected || anti_r != expected {
                return Err(Violation::new("antipode law", vec![m], "μ(S⊗id)Δ ≠ ε·1"));
            }
        }
        Ok(())
    }
}
