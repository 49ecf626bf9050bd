//! Finite groupoids as dense index tables: objects, morphisms with
//! source/target, identities, inverses and a composition map over the
//! composable pairs. Includes action groupoids, the wreath-style morphisms of
//! tuple powers, and groupoid isomorphisms.

use crate::core_algebra::{BuildError, FiniteGroup, GroupAction, Perm, Violation};
use std::collections::HashMap;

/// A finite groupoid. Composition `f ⋆ g` is read left to right:
/// `f: x → y` composed with `g: y → z` gives `x → z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Groupoid {
    objects: usize,
    src: Vec<usize>,
    tgt: Vec<usize>,
    identity: Vec<usize>,
    inverse: Vec<usize>,
    comp: HashMap<(usize, usize), usize>,
    out_by_src: Vec<Vec<usize>>,
    obj_labels: Vec<String>,
    mor_labels: Vec<String>,
}

impl Groupoid {
    /// Wraps the tables of a groupoid, checking shapes and index ranges only;
    /// the axioms are the business of `verify`.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        objects: usize,
        src: Vec<usize>,
        tgt: Vec<usize>,
        identity: Vec<usize>,
        inverse: Vec<usize>,
        comp: HashMap<(usize, usize), usize>,
        obj_labels: Option<Vec<String>>,
        mor_labels: Option<Vec<String>>,
    ) -> Result<Self, BuildError> {
        let m = src.len();
        if tgt.len() != m || inverse.len() != m {
            return Err(BuildError::Shape("src/tgt/inverse length mismatch".into()));
        }
        if identity.len() != objects {
            return Err(BuildError::Shape("one identity morphism per object required".into()));
        }
        if src.iter().chain(tgt.iter()).any(|&x| x >= objects) {
            return Err(BuildError::Shape("src/tgt object out of range".into()));
        }
        if identity.iter().chain(inverse.iter()).any(|&f| f >= m) {
            return Err(BuildError::Shape("identity/inverse morphism out of range".into()));
        }
        if comp.iter().any(|(&(f, g), &h)| f >= m || g >= m || h >= m) {
            return Err(BuildError::Shape("composition entry out of range".into()));
        }
        let obj_labels = match obj_labels {
            Some(l) if l.len() != objects => {
                return Err(BuildError::Shape("object label count mismatch".into()))
            }
            Some(l) => l,
            None => (0..objects).map(|i| format!("x{i}")).collect(),
        };
        let mor_labels = match mor_labels {
            Some(l) if l.len() != m => {
                return Err(BuildError::Shape("morphism label count mismatch".into()))
            }
            Some(l) => l,
            None => (0..m).map(|i| format!("f{i}")).collect(),
        };
        let mut out_by_src = vec![Vec::new(); objects];
        for (f, &x) in src.iter().enumerate() {
            out_by_src[x].push(f);
        }
        Ok(Groupoid {
            objects,
            src,
            tgt,
            identity,
            inverse,
            comp,
            out_by_src,
            obj_labels,
            mor_labels,
        })
    }

    /// Number of objects.
    pub fn objects(&self) -> usize {
        self.objects
    }

    /// Number of morphisms.
    pub fn morphisms(&self) -> usize {
        self.src.len()
    }

    /// Source object of `f`.
    pub fn src(&self, f: usize) -> usize {
        self.src[f]
    }

    /// Target object of `f`.
    pub fn tgt(&self, f: usize) -> usize {
        self.tgt[f]
    }

    /// Identity morphism at `x`.
    pub fn identity(&self, x: usize) -> usize {
        self.identity[x]
    }

    /// Inverse morphism of `f`.
    pub fn inverse(&self, f: usize) -> usize {
        self.inverse[f]
    }

    /// Composite `f ⋆ g` when `tgt(f) = src(g)`.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.comp.get(&(f, g)).copied()
    }

    /// Morphisms with source `x`.
    pub fn morphisms_from(&self, x: usize) -> &[usize] {
        &self.out_by_src[x]
    }

    /// All morphisms `x → y`.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        self.out_by_src[x].iter().copied().filter(|&f| self.tgt[f] == y).collect()
    }

    /// Display label of object `x`.
    pub fn obj_label(&self, x: usize) -> &str {
        &self.obj_labels[x]
    }

    /// Display label of morphism `f`.
    pub fn mor_label(&self, f: usize) -> &str {
        &self.mor_labels[f]
    }

    /// Exhaustively checks the groupoid axioms: identities, composability
    /// domain, source/target of composites, associativity and inverses.
    pub fn verify(&self) -> Result<(), Violation> {
        let m = self.morphisms();
        for x in 0..self.objects {
            let e = self.identity[x];
            if self.src[e] != x || self.tgt[e] != x {
                return Err(Violation::new("identity endpoints", vec![x], "id_x is not x → x"));
            }
        }
        // Composition is defined exactly on composable pairs, with the right
        // endpoints, and identities are neutral.
        if let Some(v) = crate::scan_range(m * m, |i| {
            let (f, g) = (i / m, i % m);
            match self.compose(f, g) {
                Some(h) => {
                    if self.tgt[f] != self.src[g] {
                        return Some(Violation::new(
                            "composability",
                            vec![f, g],
                            "composite defined on a non-composable pair",
                        ));
                    }
                    if self.src[h] != self.src[f] || self.tgt[h] != self.tgt[g] {
                        return Some(Violation::new(
                            "composite endpoints",
                            vec![f, g, h],
                            "src/tgt of f ⋆ g are wrong",
                        ));
                    }
                }
                None => {
                    if self.tgt[f] == self.src[g] {
                        return Some(Violation::new(
                            "composability",
                            vec![f, g],
                            "composable pair without a composite",
                        ));
                    }
                }
            }
            None
        }) {
            return Err(v);
        }
        for f in 0..m {
            let (le, re) = (self.identity[self.src[f]], self.identity[self.tgt[f]]);
            if self.compose(le, f) != Some(f) || self.compose(f, re) != Some(f) {
                return Err(Violation::new("identity neutrality", vec![f], "id ⋆ f ≠ f or f ⋆ id ≠ f"));
            }
            let fi = self.inverse[f];
            if self.src[fi] != self.tgt[f] || self.tgt[fi] != self.src[f] {
                return Err(Violation::new("inverse endpoints", vec![f], "f⁻¹ is not tgt(f) → src(f)"));
            }
            if self.compose(f, fi) != Some(self.identity[self.src[f]])
                || self.compose(fi, f) != Some(self.identity[self.tgt[f]])
            {
                return Err(Violation::new("inverse law", vec![f], "f ⋆ f⁻¹ or f⁻¹ ⋆ f is not an identity"));
            }
        }
        // Associativity over composable triples.
        if let Some(v) = crate::scan_range(m, |f| {
            for &g in &self.out_by_src[self.tgt[f]] {
                for &h in &self.out_by_src[self.tgt[g]] {
                    let fg = self.compose(f, g)?;
                    let gh = self.compose(g, h)?;
                    if self.compose(fg, h) != self.compose(f, gh) {
                        return Some(Violation::new(
                            "associativity",
                            vec![f, g, h],
                            "(f ⋆ g) ⋆ h ≠ f ⋆ (g ⋆ h)",
                        ));
                    }
                }
            }
            None
        }) {
            return Err(v);
        }
        Ok(())
    }
}

/// Index of the arrow `(x →g g.x)` of an action groupoid with actor order `n`.
pub fn action_arrow(x: usize, g: usize, n: usize) -> usize {
    x * n + g
}

/// Decomposes an action-groupoid arrow index into `(x, g)`.
pub fn action_arrow_parts(f: usize, n: usize) -> (usize, usize) {
    (f / n, f % n)
}

/// The action groupoid of a verified left action: objects are the points of
/// the space, arrows are `(x →g g.x)`, and the composite of `(x →g g.x)` with
/// `(g.x →h (hg).x)` carries the label `h·g` (note the order of the product).
pub fn action_groupoid(
    group: &FiniteGroup,
    action: &GroupAction,
    space_labels: Option<Vec<String>>,
) -> Result<Groupoid, BuildError> {
    action.verify_action(group).map_err(BuildError::Precondition)?;
    let n = group.order();
    let x_count = action.space_size();
    let m = x_count * n;
    let mut src = vec![0; m];
    let mut tgt = vec![0; m];
    let mut inverse = vec![0; m];
    let mut identity = vec![0; x_count];
    let obj_labels: Vec<String> = match space_labels {
        Some(l) if l.len() != x_count => {
            return Err(BuildError::Shape("space label count mismatch".into()))
        }
        Some(l) => l,
        None => (0..x_count).map(|i| format!("x{i}")).collect(),
    };
    let mut mor_labels = vec![String::new(); m];
    for x in 0..x_count {
        identity[x] = action_arrow(x, group.id(), n);
        for g in 0..n {
            let f = action_arrow(x, g, n);
            src[f] = x;
            tgt[f] = action.apply(g, x);
            inverse[f] = action_arrow(action.apply(g, x), group.inv(g), n);
            mor_labels[f] =
                format!("({} -{}-> {})", obj_labels[x], group.label(g), obj_labels[tgt[f]]);
        }
    }
    let mut comp = HashMap::with_capacity(x_count * n * n);
    for x in 0..x_count {
        for g in 0..n {
            let gx = action.apply(g, x);
            for h in 0..n {
                comp.insert(
                    (action_arrow(x, g, n), action_arrow(gx, h, n)),
                    action_arrow(x, group.mul(h, g), n),
                );
            }
        }
    }
    Groupoid::new(x_count, src, tgt, identity, inverse, comp, Some(obj_labels), Some(mor_labels))
}

/// The conjugation action groupoid of `g`: objects are group elements, arrows
/// are `(x →a a x a⁻¹)`.
pub fn aut_groupoid(g: &FiniteGroup) -> Groupoid {
    let labels = g.labels().to_vec();
    action_groupoid(g, &GroupAction::conjugation(g), Some(labels))
        .expect("conjugation is a verified action")
}

/// A morphism of the n-fold tuple power of a groupoid: a strand of arrows
/// together with a strand permutation. Runs from the tuple of arrow sources
/// to the permuted tuple of arrow targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathMorphism {
    /// Arrow on each strand (indexed by input position).
    pub arrows: Vec<usize>,
    /// Strand permutation (image array; `perm.apply(i)` is where input strand
    /// `i` ends up reading the composite top to bottom).
    pub perm: Perm,
}

impl WreathMorphism {
    /// Number of strands.
    pub fn strands(&self) -> usize {
        self.arrows.len()
    }
}

/// Source object tuple of a wreath morphism.
pub fn wreath_source(g: &Groupoid, w: &WreathMorphism) -> Vec<usize> {
    w.arrows.iter().map(|&f| g.src(f)).collect()
}

/// Target object tuple of a wreath morphism: position `i` holds the target of
/// the arrow on strand `perm⁻¹(i)`.
pub fn wreath_target(g: &Groupoid, w: &WreathMorphism) -> Vec<usize> {
    let inv = w.perm.inverse();
    (0..w.strands()).map(|i| g.tgt(w.arrows[inv.apply(i)])).collect()
}

/// Identity wreath morphism at an object tuple.
pub fn wreath_identity(g: &Groupoid, objects: &[usize]) -> WreathMorphism {
    WreathMorphism {
        arrows: objects.iter().map(|&x| g.identity(x)).collect(),
        perm: Perm::identity(objects.len()),
    }
}

/// Composes wreath morphisms `(γ̲, f) ⋆ (φ̲, p) = (γ̲ ⋆ (f ▷ φ̲), f.p)`:
/// strand-wise, arrow `i` becomes `γ_i ⋆ φ_{f(i)}`. Defined when the source
/// tuple of the second equals the target tuple of the first.
pub fn wreath_compose(
    g: &Groupoid,
    a: &WreathMorphism,
    b: &WreathMorphism,
) -> Result<WreathMorphism, Violation> {
    if a.strands() != b.strands() {
        return Err(Violation::new("wreath strands", vec![a.strands(), b.strands()], "strand count mismatch"));
    }
    let mut arrows = Vec::with_capacity(a.strands());
    for i in 0..a.strands() {
        let first = a.arrows[i];
        let second = b.arrows[a.perm.apply(i)];
        match g.compose(first, second) {
            Some(c) => arrows.push(c),
            None => {
                return Err(Violation::new(
                    "wreath composability",
                    vec![i, first, second],
                    format!(
                        "strand {i}: target {} does not meet source {}",
                        g.obj_label(g.tgt(first)),
                        g.obj_label(g.src(second))
                    ),
                ))
            }
        }
    }
    Ok(WreathMorphism { arrows, perm: a.perm.then(&b.perm) })
}

/// Inverse wreath morphism: `(γ̲, f)⁻¹ = (f⁻¹ ▷ γ̲⁻¹, f⁻¹)`.
pub fn wreath_inverse(g: &Groupoid, a: &WreathMorphism) -> WreathMorphism {
    let inv = a.perm.inverse();
    let arrows = (0..a.strands()).map(|i| g.inverse(a.arrows[inv.apply(i)])).collect();
    WreathMorphism { arrows, perm: inv }
}

/// A mapping between groupoids: an object map and a morphism map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidIso {
    /// Image of each domain object.
    pub obj_map: Vec<usize>,
    /// Image of each domain morphism.
    pub mor_map: Vec<usize>,
}

/// Checks that `iso` is an isomorphism from `dom` to `cod`: both maps are
/// bijections commuting with source, target, identities and composition.
pub fn verify_iso(dom: &Groupoid, cod: &Groupoid, iso: &GroupoidIso) -> Result<(), Violation> {
    if iso.obj_map.len() != dom.objects() || cod.objects() != dom.objects() {
        return Err(Violation::new("object map size", vec![], "object counts differ"));
    }
    if iso.mor_map.len() != dom.morphisms() || cod.morphisms() != dom.morphisms() {
        return Err(Violation::new("morphism map size", vec![], "morphism counts differ"));
    }
    Perm::from_images(iso.obj_map.clone())
        .map_err(|_| Violation::new("object bijection", vec![], "object map is not a bijection"))?;
    Perm::from_images(iso.mor_map.clone())
        .map_err(|_| Violation::new("morphism bijection", vec![], "morphism map is not a bijection"))?;
    for f in 0..dom.morphisms() {
        let ff = iso.mor_map[f];
        if cod.src(ff) != iso.obj_map[dom.src(f)] || cod.tgt(ff) != iso.obj_map[dom.tgt(f)] {
            return Err(Violation::new("endpoint compatibility", vec![f], "src/tgt not preserved"));
        }
    }
    for x in 0..dom.objects() {
        if iso.mor_map[dom.identity(x)] != cod.identity(iso.obj_map[x]) {
            return Err(Violation::new("identity preservation", vec![x], "id_x not sent to id"));
        }
    }
    let m = dom.morphisms();
    if let Some(v) = crate::scan_range(m, |f| {
        for &g in dom.morphisms_from(dom.tgt(f)) {
            let fg = dom.compose(f, g).expect("composable by construction");
            if cod.compose(iso.mor_map[f], iso.mor_map[g]) != Some(iso.mor_map[fg]) {
                return Some(Violation::new(
                    "composition preservation",
                    vec![f, g],
                    "φ(f ⋆ g) ≠ φ(f) ⋆ φ(g)",
                ));
            }
        }
        None
    }) {
        return Err(v);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aut_z2_shape() {
        let z2 = FiniteGroup::cyclic(2);
        let g = aut_groupoid(&z2);
        assert_eq!(g.objects(), 2);
        assert_eq!(g.morphisms(), 4);
        g.verify().unwrap();
        // Abelian group: conjugation fixes everything, so hom(x, x) has both
        // arrows and hom(0, 1) is empty.
        assert_eq!(g.hom(0, 0).len(), 2);
        assert!(g.hom(0, 1).is_empty());
    }

    #[test]
    fn aut_s3_frozen_arrow() {
        let s3 = FiniteGroup::symmetric(3);
        let g = aut_groupoid(&s3);
        assert_eq!(g.objects(), 6);
        assert_eq!(g.morphisms(), 36);
        g.verify().unwrap();
        // The arrow out of (12) labeled by (13) ends at (23).
        let x = s3.element_by_label("(12)").unwrap();
        let a = s3.element_by_label("(13)").unwrap();
        let f = action_arrow(x, a, 6);
        assert_eq!(g.src(f), x);
        assert_eq!(g.tgt(f), s3.element_by_label("(23)").unwrap());
    }

    #[test]
    fn action_groupoid_label_order() {
        // Composing (x →g) then (g.x →h) must carry label h·g.
        let s3 = FiniteGroup::symmetric(3);
        let g = aut_groupoid(&s3);
        let x = s3.element_by_label("(123)").unwrap();
        let a = s3.element_by_label("(12)").unwrap();
        let b = s3.element_by_label("(13)").unwrap();
        let f1 = action_arrow(x, a, 6);
        let f2 = action_arrow(g.tgt(f1), b, 6);
        let c = g.compose(f1, f2).unwrap();
        let (cx, cg) = action_arrow_parts(c, 6);
        assert_eq!(cx, x);
        assert_eq!(cg, s3.mul(b, a));
    }

    #[test]
    fn hom_sets_are_conjugacy_orbits() {
        let s3 = FiniteGroup::symmetric(3);
        let g = aut_groupoid(&s3);
        let t1 = s3.element_by_label("(12)").unwrap();
        let t2 = s3.element_by_label("(23)").unwrap();
        let r = s3.element_by_label("(123)").unwrap();
        assert!(!g.hom(t1, t2).is_empty());
        assert!(g.hom(t1, r).is_empty());
        // |hom(x, y)| = |centralizer of x| on the same orbit: 2 for a 2-cycle.
        assert_eq!(g.hom(t1, t2).len(), 2);
    }

    #[test]
    fn wreath_composition_and_inverse() {
        let s3 = FiniteGroup::symmetric(3);
        let g = aut_groupoid(&s3);
        let x = s3.element_by_label("(12)").unwrap();
        let y = s3.element_by_label("(123)").unwrap();
        let a = s3.element_by_label("(13)").unwrap();
        // Two strands crossing: arrows (x →a), (y →e), swap.
        let w1 = WreathMorphism {
            arrows: vec![action_arrow(x, a, 6), action_arrow(y, s3.id(), 6)],
            perm: Perm::adjacent_swap(2, 0),
        };
        assert_eq!(wreath_source(&g, &w1), vec![x, y]);
        // Strand 0 ends at position 1 with target a x a⁻¹; position 0 shows y.
        let tgts = wreath_target(&g, &w1);
        assert_eq!(tgts, vec![y, s3.conjugate(a, x)]);
        // Compose with the identity at the target tuple: unchanged.
        let idt = wreath_identity(&g, &tgts);
        assert_eq!(wreath_compose(&g, &w1, &idt).unwrap(), w1);
        // Compose with the inverse: identity at the source tuple.
        let w1i = wreath_inverse(&g, &w1);
        let id_src = wreath_identity(&g, &wreath_source(&g, &w1));
        assert_eq!(wreath_compose(&g, &w1, &w1i).unwrap(), id_src);
        let id_tgt = wreath_identity(&g, &tgts);
        assert_eq!(wreath_compose(&g, &w1i, &w1).unwrap(), id_tgt);
        // Mismatched tuples refuse to compose.
        assert!(wreath_compose(&g, &w1, &w1).is_err());
    }

    #[test]
    fn wreath_associativity_sample() {
        // (γ ⋆ φ) ⋆ ψ = γ ⋆ (φ ⋆ ψ) on a random-ish sample of composable
        // triples in AUT(S₃)².
        let s3 = FiniteGroup::symmetric(3);
        let g = aut_groupoid(&s3);
        let mk = |x: usize, a: usize, y: usize, b: usize, swap: bool| WreathMorphism {
            arrows: vec![action_arrow(x, a, 6), action_arrow(y, b, 6)],
            perm: if swap { Perm::adjacent_swap(2, 0) } else { Perm::identity(2) },
        };
        for x in 0..6 {
            for a in 0..6 {
                let w1 = mk(x, a, (x + 1) % 6, (a + 2) % 6, true);
                let t1 = wreath_target(&g, &w1);
                let w2 = mk(t1[0], (a + 3) % 6, t1[1], (x + a) % 6, false);
                let t2 = wreath_target(&g, &w2);
                let w3 = mk(t2[0], (x + 1) % 6, t2[1], (a + 5) % 6, true);
                let left = wreath_compose(&g, &wreath_compose(&g, &w1, &w2).unwrap(), &w3).unwrap();
                let right =
                    wreath_compose(&g, &w1, &wreath_compose(&g, &w2, &w3).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn identity_iso_verifies() {
        let g = aut_groupoid(&FiniteGroup::symmetric(3));
        let iso = GroupoidIso {
            obj_map: (0..g.objects()).collect(),
            mor_map: (0..g.morphisms()).collect(),
        };
        verify_iso(&g, &g, &iso).unwrap();
        // Breaking one morphism image breaks the check.
        let mut bad = iso;
        bad.mor_map.swap(0, 1);
        assert!(verify_iso(&g, &g, &bad).is_err());
    }
}
