//! Welded braid words: parsing and printing, the underlying strand
//! permutation, evaluation as exact operators on tensor powers of groupoid
//! representations (uniform or per-strand colored), verification of the
//! defining braid relations, and the forbidden-move probe.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bikoid::Bikoid;
use crate::core_algebra::{Perm, Violation};
use crate::representation::{
    operator_order, OperatorOrder, Representation, SparseMatrix,
};

/// Default cap on the total tensor-space dimension of an evaluation.
pub const DEFAULT_DIM_CAP: usize = 1 << 24;

/// Cap on the tensor-space dimension when a non-permutation generator forces
/// explicit sparse matrices.
pub const SPARSE_DIM_CAP: usize = 1 << 16;

/// A braid-word generator acting on strands `a` and `a+1` (1-based `a`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    /// Positive crossing.
    SPlus(usize),
    /// Negative crossing.
    SMinus(usize),
    /// Virtual crossing (plain swap).
    V(usize),
}

impl Gen {
    /// The 1-based strand index the generator acts at.
    pub fn strand(self) -> usize {
        match self {
            Gen::SPlus(a) | Gen::SMinus(a) | Gen::V(a) => a,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::SPlus(a) => write!(f, "S+{a}"),
            Gen::SMinus(a) => write!(f, "S-{a}"),
            Gen::V(a) => write!(f, "V{a}"),
        }
    }
}

/// A word in the welded braid generators on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    n: usize,
    tokens: Vec<Gen>,
}

/// A parse failure, reported with the 1-based token position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("token `{token}` at position {position}: {message}")]
pub struct ParseError {
    /// 1-based index of the offending token.
    pub position: usize,
    /// The token text as written.
    pub token: String,
    /// What went wrong.
    pub message: String,
}

impl BraidWord {
    /// Parses a whitespace-separated word. Tokens are case-insensitive:
    /// `S+k`, `S-k`, `Vk`, plus the aliases `sk` for `S+k` and `sk'` for
    /// `S-k`. Strand indices must satisfy `1 ≤ k ≤ n−1`.
    pub fn parse(text: &str, n: usize) -> Result<Self, ParseError> {
        let mut tokens = Vec::new();
        for (i, raw) in text.split_whitespace().enumerate() {
            let position = i + 1;
            let err = |message: &str| ParseError {
                position,
                token: raw.to_string(),
                message: message.to_string(),
            };
            let lower = raw.to_ascii_lowercase();
            let (kind, digits): (fn(usize) -> Gen, &str) = if let Some(rest) =
                lower.strip_prefix("s+")
            {
                (Gen::SPlus, rest)
            } else if let Some(rest) = lower.strip_prefix("s-") {
                (Gen::SMinus, rest)
            } else if let Some(rest) = lower.strip_prefix('v') {
                (Gen::V, rest)
            } else if let Some(rest) = lower.strip_prefix('s') {
                match rest.strip_suffix('\'') {
                    Some(rest) => (Gen::SMinus, rest),
                    None => (Gen::SPlus, rest),
                }
            } else {
                return Err(err("unknown generator (expected S+k, S-k, Vk, sk or sk')"));
            };
            if digits.is_empty() {
                return Err(err("missing strand index"));
            }
            let k: usize = digits
                .parse()
                .map_err(|_| err("strand index is not a number"))?;
            if k == 0 || k + 1 > n {
                return Err(err(&format!(
                    "strand index {k} out of range for {n} strands (need 1 ≤ k ≤ {})",
                    n.saturating_sub(1)
                )));
            }
            tokens.push(kind(k));
        }
        Ok(BraidWord { n, tokens })
    }

    /// Builds a word from generator tokens, range-checking each one.
    pub fn from_tokens(n: usize, tokens: Vec<Gen>) -> Result<Self, ParseError> {
        for (i, gen) in tokens.iter().enumerate() {
            let a = gen.strand();
            if a == 0 || a + 1 > n {
                return Err(ParseError {
                    position: i + 1,
                    token: gen.to_string(),
                    message: format!("strand index {a} out of range for {n} strands"),
                });
            }
        }
        Ok(BraidWord { n, tokens })
    }

    /// Number of strands.
    pub fn strands(&self) -> usize {
        self.n
    }

    /// The generator tokens in application order.
    pub fn tokens(&self) -> &[Gen] {
        &self.tokens
    }

    /// Number of tokens.
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Concatenation: this word followed by `other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, Violation> {
        if self.n != other.n {
            return Err(Violation::new(
                "word concatenation",
                vec![self.n, other.n],
                "strand counts differ",
            ));
        }
        let mut tokens = self.tokens.clone();
        tokens.extend_from_slice(&other.tokens);
        Ok(BraidWord { n: self.n, tokens })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, gen) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{gen}")?;
        }
        Ok(())
    }
}

/// The strand permutation under a word: every generator maps to the adjacent
/// transposition, composed in application order (first token acts first).
pub fn underlying_permutation(word: &BraidWord) -> Perm {
    let mut acc = Perm::identity(word.strands());
    for gen in word.tokens() {
        acc = acc.then(&Perm::adjacent_swap(word.strands(), gen.strand() - 1));
    }
    acc
}

/// An exact linear operator, kept as a basis permutation whenever possible.
#[derive(Debug, Clone)]
pub enum ExactOperator {
    /// A basis permutation `e_i ↦ e_{p(i)}`.
    Permutation(Perm),
    /// A general exact sparse matrix.
    Sparse(SparseMatrix),
}

impl PartialEq for ExactOperator {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ExactOperator::Permutation(p), ExactOperator::Permutation(q)) => p == q,
            _ => self.to_sparse() == other.to_sparse(),
        }
    }
}

impl ExactOperator {
    /// The identity operator.
    pub fn identity(n: usize) -> Self {
        ExactOperator::Permutation(Perm::identity(n))
    }

    /// Input dimension.
    pub fn dim_in(&self) -> usize {
        match self {
            ExactOperator::Permutation(p) => p.len(),
            ExactOperator::Sparse(m) => m.cols(),
        }
    }

    /// Output dimension.
    pub fn dim_out(&self) -> usize {
        match self {
            ExactOperator::Permutation(p) => p.len(),
            ExactOperator::Sparse(m) => m.rows(),
        }
    }

    /// Materializes the sparse matrix form.
    pub fn to_sparse(&self) -> SparseMatrix {
        match self {
            ExactOperator::Permutation(p) => SparseMatrix::from_perm(p),
            ExactOperator::Sparse(m) => m.clone(),
        }
    }

    /// The basis permutation, when the operator is one.
    pub fn as_permutation(&self) -> Option<Perm> {
        match self {
            ExactOperator::Permutation(p) => Some(p.clone()),
            ExactOperator::Sparse(m) => m.is_permutation(),
        }
    }

    /// Composition `self ∘ earlier` (the earlier operator applied first).
    pub fn compose(&self, earlier: &ExactOperator) -> Result<ExactOperator, Violation> {
        if self.dim_in() != earlier.dim_out() {
            return Err(Violation::new(
                "operator composition",
                vec![self.dim_in(), earlier.dim_out()],
                "dimensions do not meet",
            ));
        }
        match (self, earlier) {
            (ExactOperator::Permutation(p), ExactOperator::Permutation(q)) => {
                Ok(ExactOperator::Permutation(q.then(p)))
            }
            _ => {
                let product = self.to_sparse().mul(&earlier.to_sparse())?;
                Ok(match product.is_permutation() {
                    Some(p) => ExactOperator::Permutation(p),
                    None => ExactOperator::Sparse(product),
                })
            }
        }
    }

    /// True when this is exactly the identity.
    pub fn is_identity(&self) -> bool {
        match self {
            ExactOperator::Permutation(p) => p.is_identity(),
            ExactOperator::Sparse(m) => m.is_identity(),
        }
    }

    /// Multiplicative order, with a cycle-structure fast path for
    /// permutations and bounded iteration otherwise.
    pub fn order(&self, bound: u64) -> Result<OperatorOrder, Violation> {
        match self {
            ExactOperator::Permutation(p) => Ok(OperatorOrder::Finite(p.order())),
            ExactOperator::Sparse(m) => operator_order(m, bound),
        }
    }
}

/// Result of a colored evaluation: the operator plus the strand bookkeeping
/// relating its domain and codomain tensor factors.
#[derive(Debug, Clone)]
pub struct ColoredEval {
    /// The evaluated operator.
    pub operator: ExactOperator,
    /// Strand permutation of the word.
    pub strand_perm: Perm,
    /// Per-strand dimensions of the domain tensor factors.
    pub domain_dims: Vec<usize>,
    /// Per-strand dimensions of the codomain tensor factors (the domain
    /// dimensions pushed through the strand permutation).
    pub codomain_dims: Vec<usize>,
}

fn same_groupoid(bk: &Bikoid, rep: &Representation) -> Result<(), Violation> {
    if !Arc::ptr_eq(&bk.groupoid_arc(), &rep.groupoid_arc()) {
        return Err(Violation::new(
            "evaluation groupoid",
            vec![],
            "representation is not over the bikoid's groupoid",
        ));
    }
    Ok(())
}

/// The two-strand crossing matrix at strand colors `(rep_a, rep_b)`, mapping
/// the `a⊗b` space to the `b⊗a` space. Positive is
/// `swap ∘ Σ_{x,y} op_a(L(x,y)) ⊗ op_b(R(x,y))`; negative is its exact
/// inverse `(Σ_{x,y} op_b(L(x,y)⁻¹) ⊗ op_a(R(x,y)⁻¹)) ∘ swap`, assembled
/// directly from the inverted holonomies.
fn crossing_matrix(
    bk: &Bikoid,
    rep_a: &Representation,
    rep_b: &Representation,
    positive: bool,
) -> SparseMatrix {
    let g = bk.groupoid();
    let n = g.objects();
    let (da, db) = (rep_a.dim(), rep_b.dim());
    let mut entries = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let (ma, mb) = if positive {
                (rep_a.matrix(bk.l(x, y)), rep_b.matrix(bk.r(x, y)))
            } else {
                (
                    rep_a.matrix(g.inverse(bk.r(x, y))),
                    rep_b.matrix(g.inverse(bk.l(x, y))),
                )
            };
            for (ra, ca, va) in ma.entries() {
                for (rb, cb, vb) in mb.entries() {
                    entries.push((rb * da + ra, ca * db + cb, va * vb));
                }
            }
        }
    }
    SparseMatrix::from_entries(db * da, da * db, entries).expect("indices in range")
}

fn digits_of(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut digits = vec![0usize; dims.len()];
    for (slot, &d) in dims.iter().enumerate().rev() {
        digits[slot] = idx % d;
        idx /= d;
    }
    digits
}

fn index_of(digits: &[usize], dims: &[usize]) -> usize {
    digits.iter().zip(dims.iter()).fold(0, |acc, (&x, &d)| acc * d + x)
}

/// Embeds a two-slot basis permutation into the full tensor space; the two
/// slot dimensions swap places in the codomain.
fn embed_perm(dims: &[usize], slot: usize, two: &Perm, da: usize, db: usize) -> Perm {
    let total: usize = dims.iter().product();
    let mut out_dims = dims.to_vec();
    out_dims.swap(slot, slot + 1);
    let mut images = Vec::with_capacity(total);
    for idx in 0..total {
        let mut digits = digits_of(idx, dims);
        let image = two.apply(digits[slot] * db + digits[slot + 1]);
        digits[slot] = image / da;
        digits[slot + 1] = image % da;
        images.push(index_of(&digits, &out_dims));
    }
    Perm::from_images(images).expect("embedding a bijection stays a bijection")
}

/// Embeds a two-slot sparse operator into the full tensor space; the two
/// slot dimensions swap places in the codomain.
fn embed_sparse(dims: &[usize], slot: usize, two: &SparseMatrix, da: usize, db: usize) -> SparseMatrix {
    let total: usize = dims.iter().product();
    let pre: usize = dims[..slot].iter().product();
    let post: usize = dims[slot + 2..].iter().product();
    let mut entries = Vec::with_capacity(two.nnz() * pre * post);
    for (r2, c2, v) in two.entries() {
        let (ca, cb) = (c2 / db, c2 % db);
        let (rb, ra) = (r2 / da, r2 % da);
        for p in 0..pre {
            for q in 0..post {
                let col = ((p * da + ca) * db + cb) * post + q;
                let row = ((p * db + rb) * da + ra) * post + q;
                entries.push((row, col, v.clone()));
            }
        }
    }
    SparseMatrix::from_entries(total, total, entries).expect("indices in range")
}

/// Evaluates a word on per-strand representation colors over the bikoid's
/// groupoid. Preconditions: the bikoid and all representations are verified
/// and share one groupoid (sharing is enforced; axioms are the caller's
/// responsibility).
pub fn eval_colored(
    bk: &Bikoid,
    colors: &[&Representation],
    word: &BraidWord,
    cap: Option<usize>,
) -> Result<ColoredEval, Violation> {
    let cap = cap.unwrap_or(DEFAULT_DIM_CAP);
    if colors.len() != word.strands() {
        return Err(Violation::new(
            "strand coloring",
            vec![colors.len(), word.strands()],
            "one representation per strand required",
        ));
    }
    for rep in colors {
        same_groupoid(bk, rep)?;
    }
    let domain_dims: Vec<usize> = colors.iter().map(|r| r.dim()).collect();
    let mut total: usize = 1;
    for &d in &domain_dims {
        total = total
            .checked_mul(d)
            .filter(|&t| t <= cap)
            .ok_or_else(|| {
                Violation::new(
                    "dimension cap",
                    vec![cap],
                    "tensor space dimension exceeds the evaluation cap",
                )
            })?;
    }
    let mut dims = domain_dims.clone();
    let mut reps: Vec<&Representation> = colors.to_vec();
    let mut acc = ExactOperator::identity(total);
    for gen in word.tokens() {
        let slot = gen.strand() - 1;
        let (da, db) = (dims[slot], dims[slot + 1]);
        let op = match gen {
            Gen::V(_) => {
                let two = SparseMatrix::swap(da, db)
                    .is_permutation()
                    .expect("factor swap is a permutation");
                ExactOperator::Permutation(embed_perm(&dims, slot, &two, da, db))
            }
            Gen::SPlus(_) | Gen::SMinus(_) => {
                let two = crossing_matrix(
                    bk,
                    reps[slot],
                    reps[slot + 1],
                    matches!(gen, Gen::SPlus(_)),
                );
                match two.is_permutation() {
                    Some(p) => ExactOperator::Permutation(embed_perm(&dims, slot, &p, da, db)),
                    None => {
                        if total > SPARSE_DIM_CAP {
                            return Err(Violation::new(
                                "dimension cap",
                                vec![SPARSE_DIM_CAP],
                                "non-permutation generator exceeds the sparse-matrix cap",
                            ));
                        }
                        ExactOperator::Sparse(embed_sparse(&dims, slot, &two, da, db))
                    }
                }
            }
        };
        acc = op.compose(&acc)?;
        dims.swap(slot, slot + 1);
        reps.swap(slot, slot + 1);
    }
    Ok(ColoredEval {
        operator: acc,
        strand_perm: underlying_permutation(word),
        domain_dims,
        codomain_dims: dims,
    })
}

/// Evaluates a word with every strand carrying the same representation.
pub fn eval_word(
    bk: &Bikoid,
    rep: &Representation,
    word: &BraidWord,
    cap: Option<usize>,
) -> Result<ExactOperator, Violation> {
    let colors: Vec<&Representation> = (0..word.strands()).map(|_| rep).collect();
    Ok(eval_colored(bk, &colors, word, cap)?.operator)
}

/// The multiplicative order of the two-strand positive crossing operator.
pub fn crossing_degree(
    bk: &Bikoid,
    rep: &Representation,
    bound: u64,
) -> Result<OperatorOrder, Violation> {
    let word = BraidWord::from_tokens(2, vec![Gen::SPlus(1)])
        .expect("S+1 is valid on two strands");
    eval_word(bk, rep, &word, None)?.order(bound)
}

/// One verified braid relation, as reported to callers and serialized for
/// machine consumption.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationReport {
    /// Relation name.
    pub relation: String,
    /// Strand count it was checked on.
    pub n: usize,
    /// `"pass"` or `"fail"`.
    pub status: String,
    /// Basis tuple where the two sides first differ (empty on pass).
    pub witness: Vec<usize>,
}

impl RelationReport {
    /// True when the relation held.
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// First basis tuple on which two operators differ, if any.
fn first_difference(
    lhs: &ExactOperator,
    rhs: &ExactOperator,
    dims: &[usize],
) -> Option<Vec<usize>> {
    if let (ExactOperator::Permutation(p), ExactOperator::Permutation(q)) = (lhs, rhs) {
        return (0..p.len())
            .find(|&i| p.apply(i) != q.apply(i))
            .map(|i| digits_of(i, dims));
    }
    let (a, b) = (lhs.to_sparse(), rhs.to_sparse());
    if a == b {
        return None;
    }
    (0..a.cols())
        .find(|&j| (0..a.rows()).any(|i| a.get(i, j) != b.get(i, j)))
        .map(|j| digits_of(j, dims))
}

fn relation_report(
    bk: &Bikoid,
    rep: &Representation,
    n: usize,
    name: &str,
    lhs: Vec<Gen>,
    rhs: Vec<Gen>,
) -> Result<RelationReport, Violation> {
    let to_violation = |e: ParseError| Violation::new("relation word", vec![], e.to_string());
    let wl = BraidWord::from_tokens(n, lhs).map_err(to_violation)?;
    let wr = BraidWord::from_tokens(n, rhs).map_err(to_violation)?;
    let left = eval_word(bk, rep, &wl, None)?;
    let right = eval_word(bk, rep, &wr, None)?;
    let dims = vec![rep.dim(); n];
    let witness = first_difference(&left, &right, &dims);
    Ok(RelationReport {
        relation: name.to_string(),
        n,
        status: if witness.is_none() { "pass" } else { "fail" }.to_string(),
        witness: witness.unwrap_or_default(),
    })
}

/// Verifies the defining relations of the welded braid monoid on `n` strands
/// under evaluation: crossing inversion and virtual involution, distant
/// commutation, the braid relation, the virtual braid relation, the mixed
/// relation, and the welded over-commutation (which characterizes welded
/// bikoids and is expected to fail for non-welded ones).
pub fn verify_relations(
    bk: &Bikoid,
    rep: &Representation,
    n: usize,
) -> Result<Vec<RelationReport>, Violation> {
    if n < 2 {
        return Err(Violation::new("relation suite", vec![n], "need at least two strands"));
    }
    let mut reports = Vec::new();
    for a in 1..n {
        reports.push(relation_report(
            bk,
            rep,
            n,
            &format!("crossing inversion right (a={a})"),
            vec![Gen::SPlus(a), Gen::SMinus(a)],
            vec![],
        )?);
        reports.push(relation_report(
            bk,
            rep,
            n,
            &format!("crossing inversion left (a={a})"),
            vec![Gen::SMinus(a), Gen::SPlus(a)],
            vec![],
        )?);
        reports.push(relation_report(
            bk,
            rep,
            n,
            &format!("virtual involution (a={a})"),
            vec![Gen::V(a), Gen::V(a)],
            vec![],
        )?);
    }
    let kinds: [(&str, fn(usize) -> Gen); 3] =
        [("S+", Gen::SPlus), ("S-", Gen::SMinus), ("V", Gen::V)];
    for a in 1..n {
        for b in a + 2..n {
            for (ka, fa) in kinds {
                for (kb, fb) in kinds {
                    reports.push(relation_report(
                        bk,
                        rep,
                        n,
                        &format!("locality {ka}{a} {kb}{b}"),
                        vec![fa(a), fb(b)],
                        vec![fb(b), fa(a)],
                    )?);
                }
            }
        }
    }
    for a in 1..n.saturating_sub(1) {
        let b = a + 1;
        reports.push(relation_report(
            bk,
            rep,
            n,
            &format!("braid relation (a={a})"),
            vec![Gen::SPlus(a), Gen::SPlus(b), Gen::SPlus(a)],
            vec![Gen::SPlus(b), Gen::SPlus(a), Gen::SPlus(b)],
        )?);
        reports.push(relation_report(
            bk,
            rep,
            n,
            &format!("virtual braid relation (a={a})"),
            vec![Gen::V(a), Gen::V(b), Gen::V(a)],
            vec![Gen::V(b), Gen::V(a), Gen::V(b)],
        )?);
        reports.push(relation_report(
            bk,
            rep,
            n,
            &format!("mixed relation (a={a})"),
            vec![Gen::V(a), Gen::V(b), Gen::SPlus(a)],
            vec![Gen::SPlus(b), Gen::V(a), Gen::V(b)],
        )?);
        reports.push(relation_report(
            bk,
            rep,
            n,
            &format!("welded over-commutation (a={a})"),
            vec![Gen::V(a), Gen::SPlus(b), Gen::SPlus(a)],
            vec![Gen::SPlus(b), Gen::SPlus(a), Gen::V(b)],
        )?);
    }
    Ok(reports)
}

/// True when every report in a relation suite passed.
pub fn relations_pass(reports: &[RelationReport]) -> bool {
    reports.iter().all(RelationReport::passed)
}

/// Outcome of the forbidden-move probe.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ForbiddenReverseReport {
    /// Whether the forbidden under-commutation held under evaluation.
    pub holds: bool,
    /// Basis tuple separating the two sides when it fails.
    pub witness: Option<Vec<usize>>,
}

/// Probes the forbidden under-commutation `S⁺₁ S⁺₂ V₁ = V₂ S⁺₁ S⁺₂` on three
/// strands. It fails exactly when the bikoid's action remembers enough to
/// obstruct the move (essential structures), and holds for inessential ones.
pub fn check_forbidden_reverse(
    bk: &Bikoid,
    rep: &Representation,
) -> Result<ForbiddenReverseReport, Violation> {
    let to_violation = |e: ParseError| Violation::new("probe word", vec![], e.to_string());
    let lhs = BraidWord::from_tokens(3, vec![Gen::SPlus(1), Gen::SPlus(2), Gen::V(1)])
        .map_err(to_violation)?;
    let rhs = BraidWord::from_tokens(3, vec![Gen::V(2), Gen::SPlus(1), Gen::SPlus(2)])
        .map_err(to_violation)?;
    let left = eval_word(bk, rep, &lhs, None)?;
    let right = eval_word(bk, rep, &rhs, None)?;
    let dims = vec![rep.dim(); 3];
    let witness = first_difference(&left, &right, &dims);
    Ok(ForbiddenReverseReport { holds: witness.is_none(), witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birack::act_tuple;
    use crate::core_algebra::{AbelianGrGroup, FiniteGroup, GroupAction};
    use crate::representation::OperatorOrder;

    fn z2_bikoid() -> Bikoid {
        Bikoid::finite_group(&FiniteGroup::cyclic(2))
    }

    fn s3_bikoid() -> Bikoid {
        Bikoid::finite_group(&FiniteGroup::symmetric(3))
    }

    fn gr_z2_z3() -> AbelianGrGroup {
        let action = GroupAction::from_table(2, 3, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        AbelianGrGroup::new(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), action).unwrap()
    }

    #[test]
    fn parse_aliases_and_round_trip() {
        let w = BraidWord::parse("s1 s2' v1", 3).unwrap();
        assert_eq!(w.tokens(), &[Gen::SPlus(1), Gen::SMinus(2), Gen::V(1)]);
        assert_eq!(w.to_string(), "S+1 S-2 V1");
        assert_eq!(BraidWord::parse(&w.to_string(), 3).unwrap(), w);
        assert_eq!(BraidWord::parse("S+1", 2).unwrap(), BraidWord::parse("s+1", 2).unwrap());
        let empty = BraidWord::parse("", 4).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.to_string(), "");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = BraidWord::parse("V3", 3).unwrap_err();
        assert_eq!(err.position, 1);
        assert!(err.message.contains("out of range"));
        let err = BraidWord::parse("S+1 V9", 3).unwrap_err();
        assert_eq!(err.position, 2);
        assert_eq!(err.token, "V9");
        assert!(BraidWord::parse("x1", 3).is_err());
        assert!(BraidWord::parse("S+0", 3).is_err());
        assert!(BraidWord::parse("S+", 3).is_err());
        assert!(BraidWord::parse("S+abc", 3).is_err());
    }

    #[test]
    fn underlying_permutation_composes_left_to_right() {
        let w = BraidWord::parse("S+1 S+2", 3).unwrap();
        assert_eq!(underlying_permutation(&w).images(), &[2, 0, 1]);
        let w = BraidWord::parse("V1 V1", 3).unwrap();
        assert!(underlying_permutation(&w).is_identity());
    }

    #[test]
    fn crossing_orders_on_the_group_bikoid() {
        let bk = z2_bikoid();
        let rr = Representation::right_regular(bk.groupoid_arc());
        assert_eq!(crossing_degree(&bk, &rr, 10_000).unwrap(), OperatorOrder::Finite(4));
        let or = Representation::object_regular(bk.groupoid_arc());
        assert_eq!(crossing_degree(&bk, &or, 10_000).unwrap(), OperatorOrder::Finite(2));
    }

    #[test]
    fn empty_word_evaluates_to_the_identity() {
        let bk = z2_bikoid();
        let rr = Representation::right_regular(bk.groupoid_arc());
        let w = BraidWord::parse("", 2).unwrap();
        let op = eval_word(&bk, &rr, &w, None).unwrap();
        assert!(op.is_identity());
        assert_eq!(op.order(10).unwrap(), OperatorOrder::Finite(1));
    }

    #[test]
    fn braiding_generators_are_permutations_on_regular_representations() {
        for bk in [z2_bikoid(), s3_bikoid(), Bikoid::abelian_gr(&gr_z2_z3())] {
            for rep in [
                Representation::right_regular(bk.groupoid_arc()),
                Representation::object_regular(bk.groupoid_arc()),
            ] {
                let w = BraidWord::parse("S+1", 2).unwrap();
                let op = eval_word(&bk, &rep, &w, None).unwrap();
                assert!(matches!(op, ExactOperator::Permutation(_)));
            }
        }
    }

    #[test]
    fn evaluation_restricted_to_basis_is_the_birack_action() {
        let bk = s3_bikoid();
        let rr = Representation::right_regular(bk.groupoid_arc());
        let or = Representation::object_regular(bk.groupoid_arc());
        let upper = bk.upper_birack().unwrap();
        let lower = bk.lower_birack();
        for text in ["S+1", "S-1", "V1", "S+1 V1 S-1", "V1 S+1 S+1"] {
            let w = BraidWord::parse(text, 2).unwrap();
            for (rep, birack) in [(&rr, &upper), (&or, &lower)] {
                let d = rep.dim();
                let op = eval_word(&bk, rep, &w, None).unwrap();
                let p = op.as_permutation().expect("regular evaluation is a permutation");
                for i in 0..d {
                    for j in 0..d {
                        let expected = act_tuple(birack, &w, &[i, j]).unwrap();
                        assert_eq!(p.apply(i * d + j), expected[0] * d + expected[1]);
                    }
                }
            }
        }
        // Three strands on the object basis.
        let w = BraidWord::parse("S+1 S+2 V1 S-2", 3).unwrap();
        let d = or.dim();
        let p = eval_word(&bk, &or, &w, None)
            .unwrap()
            .as_permutation()
            .unwrap();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let expected = act_tuple(&lower, &w, &[i, j, k]).unwrap();
                    assert_eq!(
                        p.apply((i * d + j) * d + k),
                        (expected[0] * d + expected[1]) * d + expected[2]
                    );
                }
            }
        }
    }

    #[test]
    fn evaluation_is_a_monoid_homomorphism() {
        let bk = s3_bikoid();
        let or = Representation::object_regular(bk.groupoid_arc());
        let pairs = [
            ("S+1", "S+2 V1"),
            ("V2 S-1", "S+1 S+2"),
            ("S+1 V2", "V1 V2 S-1"),
        ];
        for (a, b) in pairs {
            let wa = BraidWord::parse(a, 3).unwrap();
            let wb = BraidWord::parse(b, 3).unwrap();
            let joined = wa.concat(&wb).unwrap();
            let lhs = eval_word(&bk, &or, &joined, None).unwrap();
            let rhs = eval_word(&bk, &or, &wb, None)
                .unwrap()
                .compose(&eval_word(&bk, &or, &wa, None).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn block_structure_follows_the_strand_permutation() {
        // On the object basis each evaluated word permutes basis tuples; the
        // underlying strand permutation predicts which slots carry which
        // original coordinates for the virtual-only part.
        let bk = z2_bikoid();
        let or = Representation::object_regular(bk.groupoid_arc());
        let w = BraidWord::parse("V1 V2", 3).unwrap();
        let u = underlying_permutation(&w);
        let p = eval_word(&bk, &or, &w, None).unwrap().as_permutation().unwrap();
        let d = or.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let tuple = [i, j, k];
                    let image = digits_of(p.apply((i * d + j) * d + k), &[d, d, d]);
                    let mut expected = [0; 3];
                    for (slot, &v) in tuple.iter().enumerate() {
                        expected[u.apply(slot)] = v;
                    }
                    assert_eq!(image, expected);
                }
            }
        }
    }

    #[test]
    fn relations_hold_on_catalog_bikoids() {
        for bk in [z2_bikoid(), Bikoid::abelian_gr(&gr_z2_z3())] {
            let or = Representation::object_regular(bk.groupoid_arc());
            let reports = verify_relations(&bk, &or, 3).unwrap();
            assert!(relations_pass(&reports), "failing report: {reports:?}");
        }
        let bk = z2_bikoid();
        let or = Representation::object_regular(bk.groupoid_arc());
        let reports = verify_relations(&bk, &or, 2).unwrap();
        assert!(relations_pass(&reports));
        // Two strands admit no triple relations.
        assert!(reports.iter().all(|r| !r.relation.contains("braid relation")));
    }

    #[test]
    fn forbidden_reverse_separates_essential_bikoids() {
        let bk = z2_bikoid();
        let rr = Representation::right_regular(bk.groupoid_arc());
        assert!(check_forbidden_reverse(&bk, &rr).unwrap().holds);
        let bk = s3_bikoid();
        let rr = Representation::right_regular(bk.groupoid_arc());
        let report = check_forbidden_reverse(&bk, &rr).unwrap();
        assert!(!report.holds);
        assert_eq!(report.witness.as_ref().map(Vec::len), Some(3));
    }

    #[test]
    fn colored_virtual_crossing_swaps_factors_and_colors() {
        let bk = z2_bikoid();
        let or = Representation::object_regular(bk.groupoid_arc());
        let rr = Representation::right_regular(bk.groupoid_arc());
        let w = BraidWord::parse("V1", 2).unwrap();
        let eval = eval_colored(&bk, &[&or, &rr], &w, None).unwrap();
        assert_eq!(eval.domain_dims, vec![2, 4]);
        assert_eq!(eval.codomain_dims, vec![4, 2]);
        assert_eq!(eval.operator.to_sparse(), SparseMatrix::swap(2, 4));
    }

    #[test]
    fn colored_evaluation_is_functorial_and_extends_uniform() {
        let bk = z2_bikoid();
        let or = Representation::object_regular(bk.groupoid_arc());
        let rr = Representation::right_regular(bk.groupoid_arc());
        let wa = BraidWord::parse("S+1 V2", 3).unwrap();
        let wb = BraidWord::parse("V1 S-2", 3).unwrap();
        let colors: Vec<&Representation> = vec![&or, &rr, &or];
        let first = eval_colored(&bk, &colors, &wa, None).unwrap();
        // Colors of the second word are the first word's codomain colors.
        let u_inv = first.strand_perm.inverse();
        let mid: Vec<&Representation> =
            (0..3).map(|i| colors[u_inv.apply(i)]).collect();
        let second = eval_colored(&bk, &mid, &wb, None).unwrap();
        let joined = eval_colored(&bk, &colors, &wa.concat(&wb).unwrap(), None).unwrap();
        assert_eq!(
            joined.operator,
            second.operator.compose(&first.operator).unwrap()
        );
        assert_eq!(joined.codomain_dims, second.codomain_dims);
        // All-equal coloring agrees with the uniform evaluation.
        let uniform = eval_word(&bk, &or, &wa, None).unwrap();
        let same = eval_colored(&bk, &[&or, &or, &or], &wa, None).unwrap();
        assert_eq!(uniform, same.operator);
    }

    #[test]
    fn dimension_cap_guards_evaluation() {
        let bk = z2_bikoid();
        let rr = Representation::right_regular(bk.groupoid_arc());
        let tokens = vec![Gen::SPlus(1)];
        let w = BraidWord::from_tokens(16, tokens).unwrap();
        // 4^16 = 2^32 exceeds the default cap.
        assert!(eval_word(&bk, &rr, &w, None).is_err());
        let small = BraidWord::parse("S+1", 2).unwrap();
        assert!(eval_word(&bk, &rr, &small, Some(4)).is_err());
    }
}
