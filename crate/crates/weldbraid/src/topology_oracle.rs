//! Symbolic oracle for braid actions: words in free meridian generators,
//! integer combinations of translated balloon generators, the automorphism
//! action of welded braid generators on both, evaluation into an abelian
//! gr-group, and a dual-route comparison against the tuple action of the
//! module birack.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::birack::{act_tuple, Birack};
use crate::braid_engine::{BraidWord, Gen};
use crate::core_algebra::{pair_index, pair_split, AbelianGrGroup, Violation};

/// A freely reduced word in meridian generators; the letter `±(k+1)` stands
/// for the generator `k` or its inverse.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    /// The empty word.
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    /// The single generator `k` (0-based).
    pub fn generator(k: usize) -> Self {
        FreeWord(vec![k as i32 + 1])
    }

    /// Builds from signed letters, reducing free cancellations.
    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut stack: Vec<i32> = Vec::new();
        for l in letters {
            assert!(l != 0, "letter 0 is not a generator");
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        FreeWord(stack)
    }

    /// The reduced letters.
    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    /// True for the empty word.
    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation followed by free reduction.
    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        FreeWord::from_letters(self.0.iter().chain(other.0.iter()).copied())
    }

    /// The inverse word.
    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|&l| -l).collect())
    }

    /// Applies a homomorphic substitution sending generator `k` to
    /// `images[k]`.
    pub fn substitute(&self, images: &[FreeWord]) -> Result<FreeWord, Violation> {
        let mut acc = FreeWord::identity();
        for &l in &self.0 {
            let k = l.unsigned_abs() as usize - 1;
            let image = images.get(k).ok_or_else(|| {
                Violation::new("word substitution", vec![k], "generator index out of range")
            })?;
            acc = if l > 0 { acc.mul(image) } else { acc.mul(&image.inverse()) };
        }
        Ok(acc)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, &l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            if l > 0 {
                write!(f, "m{}", l)?;
            } else {
                write!(f, "m{}⁻¹", -l)?;
            }
        }
        Ok(())
    }
}

/// An integer combination of translated balloon generators: a sparse map
/// from `(translating word, generator index)` to a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Pi2Element {
    terms: BTreeMap<(FreeWord, usize), i64>,
}

impl Pi2Element {
    /// The zero element.
    pub fn zero() -> Self {
        Pi2Element::default()
    }

    /// The balloon generator `k` with trivial translation.
    pub fn generator(k: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((FreeWord::identity(), k), 1);
        Pi2Element { terms }
    }

    /// True when zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates the stored terms.
    pub fn terms(&self) -> impl Iterator<Item = (&(FreeWord, usize), &i64)> + '_ {
        self.terms.iter()
    }

    /// Adds a single term in place.
    pub fn add_term(&mut self, word: FreeWord, k: usize, coeff: i64) {
        if coeff == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((word, k)) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
        }
    }

    /// Sum of two elements.
    pub fn add(&self, other: &Pi2Element) -> Pi2Element {
        let mut out = self.clone();
        for ((w, k), c) in &other.terms {
            out.add_term(w.clone(), *k, *c);
        }
        out
    }

    /// Scales by an integer.
    pub fn scale(&self, c: i64) -> Pi2Element {
        if c == 0 {
            return Pi2Element::zero();
        }
        let terms = self.terms.iter().map(|((w, k), v)| ((w.clone(), *k), v * c)).collect();
        Pi2Element { terms }
    }

    /// Left-translates every term by a word.
    pub fn translate(&self, w: &FreeWord) -> Pi2Element {
        let terms = self
            .terms
            .iter()
            .map(|((u, k), c)| ((w.mul(u), *k), *c))
            .collect();
        Pi2Element { terms }
    }

    /// Total coefficient sum per balloon generator, ignoring translations.
    pub fn balloon_totals(&self, n: usize) -> Vec<i64> {
        let mut totals = vec![0i64; n];
        for ((_, k), c) in &self.terms {
            if *k < n {
                totals[*k] += c;
            }
        }
        totals
    }
}

impl fmt::Display for Pi2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((w, k), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *c != 1 {
                write!(f, "{c}·")?;
            }
            if w.is_identity() {
                write!(f, "v{}", k + 1)?;
            } else {
                write!(f, "({w})▷v{}", k + 1)?;
            }
        }
        Ok(())
    }
}

/// Which strand's meridian conjugates under a positive crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleSet {
    /// The first (over) strand's meridian conjugates the second strand's.
    ConjugateByFirst,
    /// The second strand's meridian conjugates the first strand's; this is
    /// the convention matching the tuple action of the module birack.
    ConjugateBySecond,
}

/// An endomorphism of the meridian/balloon system: images of every meridian
/// generator and every balloon generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeAction {
    n: usize,
    m: Vec<FreeWord>,
    v: Vec<Pi2Element>,
}

impl FreeAction {
    /// The identity endomorphism on `n` strands.
    pub fn identity(n: usize) -> Self {
        FreeAction {
            n,
            m: (0..n).map(FreeWord::generator).collect(),
            v: (0..n).map(Pi2Element::generator).collect(),
        }
    }

    /// Number of strands.
    pub fn strands(&self) -> usize {
        self.n
    }

    /// Image of meridian generator `k`.
    pub fn meridian_image(&self, k: usize) -> &FreeWord {
        &self.m[k]
    }

    /// Image of balloon generator `k`.
    pub fn balloon_image(&self, k: usize) -> &Pi2Element {
        &self.v[k]
    }

    /// Image of a word under this endomorphism.
    pub fn apply_word(&self, w: &FreeWord) -> Result<FreeWord, Violation> {
        w.substitute(&self.m)
    }

    /// Image of a balloon combination under this endomorphism.
    pub fn apply_pi2(&self, p: &Pi2Element) -> Result<Pi2Element, Violation> {
        let mut out = Pi2Element::zero();
        for ((w, k), c) in p.terms() {
            let image = self.v.get(*k).ok_or_else(|| {
                Violation::new("balloon substitution", vec![*k], "generator index out of range")
            })?;
            let moved = image.translate(&self.apply_word(w)?).scale(*c);
            out = out.add(&moved);
        }
        Ok(out)
    }

    /// The composite `self ∘ inner`: applies `self` to the images of
    /// `inner`.
    pub fn compose_after(&self, inner: &FreeAction) -> Result<FreeAction, Violation> {
        if self.n != inner.n {
            return Err(Violation::new(
                "action composition",
                vec![self.n, inner.n],
                "strand counts differ",
            ));
        }
        let m = inner.m.iter().map(|w| self.apply_word(w)).collect::<Result<_, _>>()?;
        let v = inner.v.iter().map(|p| self.apply_pi2(p)).collect::<Result<_, _>>()?;
        Ok(FreeAction { n: self.n, m, v })
    }
}

/// The action of one braid generator on the meridian/balloon system. The
/// inverse generator's rules are the closed-form symbolic solution of the
/// positive rules; `verify_generator_inverses` confirms they compose to the
/// identity.
pub fn generator_action(gen: Gen, n: usize, rules: RuleSet) -> FreeAction {
    let i = gen.strand() - 1;
    let mut act = FreeAction::identity(n);
    let m = |k: usize| FreeWord::generator(k);
    let v = |k: usize| Pi2Element::generator(k);
    match (gen, rules) {
        (Gen::V(_), _) => {
            act.m.swap(i, i + 1);
            act.v.swap(i, i + 1);
        }
        (Gen::SPlus(_), RuleSet::ConjugateByFirst) => {
            act.m[i] = m(i).inverse().mul(&m(i + 1)).mul(&m(i));
            act.m[i + 1] = m(i);
            let pushed = v(i + 1).translate(&m(i).inverse());
            act.v[i] = pushed.clone();
            act.v[i + 1] = v(i).add(&v(i + 1)).add(&pushed.scale(-1));
        }
        (Gen::SMinus(_), RuleSet::ConjugateByFirst) => {
            act.m[i] = m(i + 1);
            act.m[i + 1] = m(i + 1).mul(&m(i)).mul(&m(i + 1).inverse());
            let pushed = v(i).translate(&m(i + 1));
            act.v[i] = v(i).add(&v(i + 1)).add(&pushed.scale(-1));
            act.v[i + 1] = pushed;
        }
        (Gen::SPlus(_), RuleSet::ConjugateBySecond) => {
            act.m[i] = m(i + 1);
            act.m[i + 1] = m(i + 1).inverse().mul(&m(i)).mul(&m(i + 1));
            let pushed = v(i).translate(&m(i + 1).inverse());
            act.v[i] = v(i).add(&v(i + 1)).add(&pushed.scale(-1));
            act.v[i + 1] = pushed;
        }
        (Gen::SMinus(_), RuleSet::ConjugateBySecond) => {
            act.m[i] = m(i).mul(&m(i + 1)).mul(&m(i).inverse());
            act.m[i + 1] = m(i);
            let pushed = v(i + 1).translate(&m(i));
            act.v[i] = pushed.clone();
            act.v[i + 1] = v(i).add(&v(i + 1)).add(&pushed.scale(-1));
        }
    }
    act
}

/// The composite action of a braid word. The two rule sets compose in
/// opposite orders because they sit on opposite sides of a duality: the
/// conjugate-by-first rules are the substitutions induced by the strand
/// motions themselves, so the earliest token is applied innermost, while the
/// conjugate-by-second rules realise the dual reading in which assignments
/// are pulled back along the word, so the latest token is applied innermost.
/// Only the latter matches the tuple action, where the first token acts on
/// the tuple first; both satisfy every welded relation in their own order.
pub fn word_action(word: &BraidWord, rules: RuleSet) -> Result<FreeAction, Violation> {
    let mut acc = FreeAction::identity(word.strands());
    match rules {
        RuleSet::ConjugateByFirst => {
            for gen in word.tokens() {
                acc = generator_action(*gen, word.strands(), rules).compose_after(&acc)?;
            }
        }
        RuleSet::ConjugateBySecond => {
            for gen in word.tokens().iter().rev() {
                acc = generator_action(*gen, word.strands(), rules).compose_after(&acc)?;
            }
        }
    }
    Ok(acc)
}

/// Checks that the positive and negative crossing rules are mutually inverse
/// automorphisms, in both rule sets, for every strand position.
pub fn verify_generator_inverses(n: usize) -> Result<(), Violation> {
    let id = FreeAction::identity(n);
    for a in 1..n {
        for rules in [RuleSet::ConjugateByFirst, RuleSet::ConjugateBySecond] {
            let plus = generator_action(Gen::SPlus(a), n, rules);
            let minus = generator_action(Gen::SMinus(a), n, rules);
            if plus.compose_after(&minus)? != id || minus.compose_after(&plus)? != id {
                return Err(Violation::new(
                    "crossing inverse rules",
                    vec![a],
                    "positive and negative rules do not compose to the identity",
                ));
            }
            let virt = generator_action(Gen::V(a), n, rules);
            if virt.compose_after(&virt)? != id {
                return Err(Violation::new(
                    "virtual involution rules",
                    vec![a],
                    "the swap rule is not an involution",
                ));
            }
        }
    }
    Ok(())
}

/// Checks every defining relation of the welded braid monoid as an equality
/// of composite endomorphisms on `n` strands.
pub fn verify_free_relations(n: usize, rules: RuleSet) -> Result<(), Violation> {
    let mut pairs: Vec<(String, Vec<Gen>, Vec<Gen>)> = Vec::new();
    for a in 1..n {
        pairs.push((
            format!("crossing inversion (a={a})"),
            vec![Gen::SPlus(a), Gen::SMinus(a)],
            vec![],
        ));
        pairs.push((format!("virtual involution (a={a})"), vec![Gen::V(a), Gen::V(a)], vec![]));
    }
    let kinds: [fn(usize) -> Gen; 3] = [Gen::SPlus, Gen::SMinus, Gen::V];
    for a in 1..n {
        for b in a + 2..n {
            for fa in kinds {
                for fb in kinds {
                    pairs.push((
                        format!("locality ({a},{b})"),
                        vec![fa(a), fb(b)],
                        vec![fb(b), fa(a)],
                    ));
                }
            }
        }
    }
    for a in 1..n.saturating_sub(1) {
        let b = a + 1;
        pairs.push((
            format!("braid relation (a={a})"),
            vec![Gen::SPlus(a), Gen::SPlus(b), Gen::SPlus(a)],
            vec![Gen::SPlus(b), Gen::SPlus(a), Gen::SPlus(b)],
        ));
        pairs.push((
            format!("virtual braid relation (a={a})"),
            vec![Gen::V(a), Gen::V(b), Gen::V(a)],
            vec![Gen::V(b), Gen::V(a), Gen::V(b)],
        ));
        pairs.push((
            format!("mixed relation (a={a})"),
            vec![Gen::V(a), Gen::V(b), Gen::SPlus(a)],
            vec![Gen::SPlus(b), Gen::V(a), Gen::V(b)],
        ));
        pairs.push((
            format!("welded over-commutation (a={a})"),
            vec![Gen::V(a), Gen::SPlus(b), Gen::SPlus(a)],
            vec![Gen::SPlus(b), Gen::SPlus(a), Gen::V(b)],
        ));
    }
    for (name, lhs, rhs) in pairs {
        let to_violation =
            |e: crate::braid_engine::ParseError| Violation::new("relation word", vec![], e.to_string());
        let wl = BraidWord::from_tokens(n, lhs).map_err(to_violation)?;
        let wr = BraidWord::from_tokens(n, rhs).map_err(to_violation)?;
        if word_action(&wl, rules)? != word_action(&wr, rules)? {
            return Err(Violation::new(
                "free braid relation",
                vec![n],
                format!("relation `{name}` fails on the meridian/balloon system"),
            ));
        }
    }
    Ok(())
}

/// Evaluation of symbolic meridian/balloon expressions into an abelian
/// gr-group under a strand assignment `m_k ↦ g_k`, `v_k ↦ a_k`.
#[derive(Debug, Clone)]
pub struct GrAssignment<'a> {
    gr: &'a AbelianGrGroup,
    g_vals: Vec<usize>,
    a_vals: Vec<usize>,
}

impl<'a> GrAssignment<'a> {
    /// Wraps a tuple of `(group part, module part)` pairs.
    pub fn new(gr: &'a AbelianGrGroup, tuple: &[(usize, usize)]) -> Result<Self, Violation> {
        for &(g, a) in tuple {
            if g >= gr.g().order() || a >= gr.a().order() {
                return Err(Violation::new("strand assignment", vec![g, a], "entry out of range"));
            }
        }
        Ok(GrAssignment {
            gr,
            g_vals: tuple.iter().map(|&(g, _)| g).collect(),
            a_vals: tuple.iter().map(|&(_, a)| a).collect(),
        })
    }

    /// The group image of a meridian word.
    pub fn eval_word(&self, w: &FreeWord) -> Result<usize, Violation> {
        let g = self.gr.g();
        let mut acc = g.id();
        for &l in w.letters() {
            let k = l.unsigned_abs() as usize - 1;
            let val = *self.g_vals.get(k).ok_or_else(|| {
                Violation::new("word evaluation", vec![k], "meridian index out of range")
            })?;
            acc = g.mul(acc, if l > 0 { val } else { g.inv(val) });
        }
        Ok(acc)
    }

    /// The module image of a balloon combination: coefficients act as
    /// repeated addition, translations through the structure action.
    pub fn eval_pi2(&self, p: &Pi2Element) -> Result<usize, Violation> {
        let a_group = self.gr.a();
        let mut acc = a_group.id();
        for ((w, k), c) in p.terms() {
            let base = *self.a_vals.get(*k).ok_or_else(|| {
                Violation::new("balloon evaluation", vec![*k], "balloon index out of range")
            })?;
            let moved = self.gr.action().apply(self.eval_word(w)?, base);
            acc = a_group.mul(acc, a_group.pow(moved, *c as i64));
        }
        Ok(acc)
    }
}

/// The birack on pairs `(g, a)` acted on by braid words strand-wise:
/// `(z,a)\(w,b) = (w⁻¹zw, w⁻¹▷a)` and `(w,b)/(z,a) = (w, a+b−w⁻¹▷a)`,
/// written multiplicatively in the module.
pub fn gr_module_birack(gr: &AbelianGrGroup) -> Birack {
    let g = gr.g();
    let a_group = gr.a();
    let a_n = a_group.order();
    let size = g.order() * a_n;
    let mut over = vec![vec![0usize; size]; size];
    let mut under = vec![vec![0usize; size]; size];
    for x in 0..size {
        let (z, a) = pair_split(x, a_n);
        for y in 0..size {
            let (w, b) = pair_split(y, a_n);
            let w_inv = g.inv(w);
            under[x][y] = pair_index(
                g.mul(g.mul(w_inv, z), w),
                gr.action().apply(w_inv, a),
                a_n,
            );
            over[x][y] = pair_index(
                w,
                a_group.mul(a_group.mul(a, b), a_group.inv(gr.action().apply(w_inv, a))),
                a_n,
            );
        }
    }
    Birack::new(size, over, under).expect("pair indices are in range")
}

/// Compares the two routes for a braid word acting on a strand tuple: the
/// birack tuple action against the symbolic action evaluated through the
/// strand assignment.
pub fn compare_actions(
    gr: &AbelianGrGroup,
    word: &BraidWord,
    tuple: &[(usize, usize)],
) -> Result<(), Violation> {
    if tuple.len() != word.strands() {
        return Err(Violation::new(
            "route comparison",
            vec![tuple.len(), word.strands()],
            "tuple length differs from the word's strand count",
        ));
    }
    let a_n = gr.a().order();
    let birack = gr_module_birack(gr);
    let indices: Vec<usize> = tuple.iter().map(|&(g, a)| pair_index(g, a, a_n)).collect();
    let direct = act_tuple(&birack, word, &indices)?;
    let action = word_action(word, RuleSet::ConjugateBySecond)?;
    let assignment = GrAssignment::new(gr, tuple)?;
    for i in 0..tuple.len() {
        let g_img = assignment.eval_word(action.meridian_image(i))?;
        let a_img = assignment.eval_pi2(action.balloon_image(i))?;
        let symbolic = pair_index(g_img, a_img, a_n);
        if symbolic != direct[i] {
            return Err(Violation::new(
                "route comparison",
                vec![i, direct[i], symbolic],
                format!(
                    "strand {} of `{}` on {:?}: birack route {:?} vs symbolic route {:?}",
                    i + 1,
                    word,
                    tuple,
                    pair_split(direct[i], a_n),
                    (g_img, a_img)
                ),
            ));
        }
    }
    Ok(())
}

/// Summary of a seeded random comparison run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleOutcome {
    /// Number of random cases checked.
    pub trials: u64,
    /// Maximum word length drawn.
    pub max_len: usize,
    /// Maximum strand count drawn.
    pub max_strands: usize,
    /// RNG seed used.
    pub seed: u64,
}

/// Runs seeded random dual-route comparisons: uniformly random words (length
/// up to `max_len`, strand counts 2..=`max_strands`) on uniformly random
/// tuples. Zero-length draws compare the identity action and pass vacuously.
pub fn run_random_suite(
    gr: &AbelianGrGroup,
    trials: u64,
    max_len: usize,
    max_strands: usize,
    seed: u64,
) -> Result<OracleOutcome, Violation> {
    let max_strands = max_strands.max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let n = rng.gen_range(2..=max_strands);
        let len = rng.gen_range(0..=max_len);
        let tokens: Vec<Gen> = (0..len)
            .map(|_| {
                let a = rng.gen_range(1..n);
                match rng.gen_range(0..3) {
                    0 => Gen::SPlus(a),
                    1 => Gen::SMinus(a),
                    _ => Gen::V(a),
                }
            })
            .collect();
        let word = BraidWord::from_tokens(n, tokens)
            .map_err(|e| Violation::new("random word", vec![trial as usize], e.to_string()))?;
        let tuple: Vec<(usize, usize)> = (0..n)
            .map(|_| (rng.gen_range(0..gr.g().order()), rng.gen_range(0..gr.a().order())))
            .collect();
        compare_actions(gr, &word, &tuple).map_err(|v| {
            Violation::new(
                "random route comparison",
                vec![trial as usize],
                format!("trial {trial} (seed {seed}): {v}"),
            )
        })?;
    }
    Ok(OracleOutcome { trials, max_len, max_strands, seed })
}

/// Exhaustively compares every single-generator word on two strands against
/// every strand tuple; returns the number of cases checked.
pub fn run_single_generator_sweep(gr: &AbelianGrGroup) -> Result<u64, Violation> {
    let mut cases = 0u64;
    let size = gr.g().order() * gr.a().order();
    for gen in [Gen::SPlus(1), Gen::SMinus(1), Gen::V(1)] {
        let word = BraidWord::from_tokens(2, vec![gen])
            .map_err(|e| Violation::new("sweep word", vec![], e.to_string()))?;
        for x in 0..size {
            for y in 0..size {
                let a_n = gr.a().order();
                let tuple = vec![pair_split(x, a_n), pair_split(y, a_n)];
                compare_actions(gr, &word, &tuple)?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bikoid::Bikoid;
    use crate::core_algebra::{FiniteGroup, GroupAction};

    fn gr_z2_z3() -> AbelianGrGroup {
        let action = GroupAction::from_table(2, 3, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        AbelianGrGroup::new(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), action).unwrap()
    }

    #[test]
    fn free_words_reduce_and_substitute() {
        let w = FreeWord::from_letters([1, -1]);
        assert!(w.is_identity());
        let w = FreeWord::from_letters([1, 2, -2, -1, 3]);
        assert_eq!(w, FreeWord::generator(2));
        let a = FreeWord::from_letters([1, 2]);
        assert!(a.mul(&a.inverse()).is_identity());
        assert!(a.inverse().mul(&a).is_identity());
        // Substitution is homomorphic.
        let images = vec![FreeWord::from_letters([2, 1]), FreeWord::generator(0)];
        let left = a.substitute(&images).unwrap();
        let right = FreeWord::generator(0)
            .substitute(&images)
            .unwrap()
            .mul(&FreeWord::generator(1).substitute(&images).unwrap());
        assert_eq!(left, right);
        assert!(FreeWord::generator(5).substitute(&images).is_err());
        assert_eq!(w.to_string(), "m3");
        assert_eq!(FreeWord::identity().to_string(), "1");
    }

    #[test]
    fn pi2_arithmetic_cancels() {
        let p = Pi2Element::generator(0);
        assert!(p.add(&p.scale(-1)).is_zero());
        let t = p.translate(&FreeWord::generator(1));
        assert_ne!(t, p);
        let back = t.translate(&FreeWord::generator(1).inverse());
        assert_eq!(back, p);
        assert_eq!(p.add(&p).balloon_totals(2), vec![2, 0]);
    }

    #[test]
    fn generator_rules_are_invertible_automorphisms() {
        verify_generator_inverses(2).unwrap();
        verify_generator_inverses(3).unwrap();
        verify_generator_inverses(4).unwrap();
    }

    #[test]
    fn braid_relations_hold_symbolically() {
        verify_free_relations(3, RuleSet::ConjugateByFirst).unwrap();
        verify_free_relations(3, RuleSet::ConjugateBySecond).unwrap();
        verify_free_relations(4, RuleSet::ConjugateByFirst).unwrap();
    }

    #[test]
    fn positive_crossing_rules_frozen() {
        let act = generator_action(Gen::SPlus(1), 2, RuleSet::ConjugateByFirst);
        assert_eq!(
            act.meridian_image(0),
            &FreeWord::from_letters([-1, 2, 1])
        );
        assert_eq!(act.meridian_image(1), &FreeWord::generator(0));
        // v1 ↦ m1⁻¹ ▷ v2
        let mut expected = Pi2Element::zero();
        expected.add_term(FreeWord::from_letters([-1]), 1, 1);
        assert_eq!(act.balloon_image(0), &expected);
        // v2 ↦ v1 + v2 − m1⁻¹ ▷ v2
        let mut expected = Pi2Element::generator(0).add(&Pi2Element::generator(1));
        expected.add_term(FreeWord::from_letters([-1]), 1, -1);
        assert_eq!(act.balloon_image(1), &expected);
    }

    #[test]
    fn total_balloon_sum_is_preserved() {
        for n in [2usize, 3] {
            for rules in [RuleSet::ConjugateByFirst, RuleSet::ConjugateBySecond] {
                for a in 1..n {
                    for gen in [Gen::SPlus(a), Gen::SMinus(a), Gen::V(a)] {
                        let act = generator_action(gen, n, rules);
                        let total = (0..n)
                            .fold(Pi2Element::zero(), |acc, k| acc.add(&Pi2Element::generator(k)));
                        assert_eq!(
                            act.apply_pi2(&total).unwrap().balloon_totals(n),
                            total.balloon_totals(n)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn module_birack_matches_the_bikoid_lower_birack() {
        let gr = gr_z2_z3();
        let direct = gr_module_birack(&gr);
        direct.verify().unwrap();
        direct.verify_welded().unwrap();
        assert_eq!(direct, Bikoid::abelian_gr(&gr).lower_birack());
    }

    #[test]
    fn worked_comparison_example() {
        // Tuple ((−1, 1), (−1, 2)) under the single positive crossing.
        let gr = gr_z2_z3();
        let word = BraidWord::parse("S+1", 2).unwrap();
        compare_actions(&gr, &word, &[(1, 1), (1, 2)]).unwrap();
        // The birack route fixes this tuple; check the symbolic route ends
        // at the same place.
        let birack = gr_module_birack(&gr);
        let idx = [pair_index(1, 1, 3), pair_index(1, 2, 3)];
        assert_eq!(act_tuple(&birack, &word, &idx).unwrap(), idx.to_vec());
    }

    #[test]
    fn random_suite_and_sweep_pass() {
        let gr = gr_z2_z3();
        let outcome = run_random_suite(&gr, 25, 6, 3, 7).unwrap();
        assert_eq!(outcome.trials, 25);
        // Three single-generator words, 6×6 strand tuples each.
        assert_eq!(run_single_generator_sweep(&gr).unwrap(), 3 * 36);
    }

    #[test]
    fn zero_length_suite_passes_vacuously() {
        let gr = gr_z2_z3();
        run_random_suite(&gr, 5, 0, 3, 11).unwrap();
    }
}
