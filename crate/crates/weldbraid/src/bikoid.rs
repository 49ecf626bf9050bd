//! Bikoids: a groupoid together with holonomy arrows `L(x, y): x → x\y` and
//! `R(x, y): y → y/x` whose targets induce a birack on objects and whose
//! compositions satisfy the three-strand exchange laws.

use crate::birack::Birack;
use crate::core_algebra::{pair_index, pair_split, AbelianGrGroup, BuildError, FiniteGroup, Perm, Violation};
use crate::groupoid::{
    action_arrow, aut_groupoid, wreath_compose, wreath_identity, wreath_inverse, Groupoid,
    GroupoidIso, WreathMorphism,
};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// A bikoid structure: holonomy arrows indexed by ordered object pairs.
#[derive(Debug, Clone)]
pub struct Bikoid {
    groupoid: Arc<Groupoid>,
    l_map: Vec<usize>,
    r_map: Vec<usize>,
}

/// Tri-state classification flags of a bikoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BikoidClass {
    /// The bikoid axioms hold.
    pub is_bikoid: bool,
    /// The welded laws hold.
    pub is_welded: bool,
    /// Essentiality of the upper birack; `None` when not a welded bikoid.
    pub is_essential: Option<bool>,
}

impl Bikoid {
    /// Wraps holonomy tables `l[x][y] = L(x,y)`, `r[x][y] = R(x,y)` (shape
    /// check only; axioms via `verify`).
    pub fn new(
        groupoid: Arc<Groupoid>,
        l: Vec<Vec<usize>>,
        r: Vec<Vec<usize>>,
    ) -> Result<Self, BuildError> {
        let n = groupoid.objects();
        let m = groupoid.morphisms();
        let flatten = |t: &[Vec<usize>], name: &str| -> Result<Vec<usize>, BuildError> {
            if t.len() != n {
                return Err(BuildError::Shape(format!("{name} table has wrong row count")));
            }
            let mut flat = Vec::with_capacity(n * n);
            for row in t {
                if row.len() != n {
                    return Err(BuildError::Shape(format!("{name} table is not square")));
                }
                for &v in row {
                    if v >= m {
                        return Err(BuildError::Shape(format!("{name} entry {v} is not a morphism")));
                    }
                    flat.push(v);
                }
            }
            Ok(flat)
        };
        let l_map = flatten(&l, "L")?;
        let r_map = flatten(&r, "R")?;
        Ok(Bikoid { groupoid, l_map, r_map })
    }

    /// The welded bikoid of a finite group on its conjugation action
    /// groupoid: `L(x,y) = (x —y⁻¹→ y⁻¹xy)` and `R(x,y) = (y —1→ y)`.
    pub fn finite_group(group: &FiniteGroup) -> Self {
        let n = group.order();
        let groupoid = Arc::new(aut_groupoid(group));
        let mut l_map = vec![0; n * n];
        let mut r_map = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                l_map[x * n + y] = action_arrow(x, group.inv(y), n);
                r_map[x * n + y] = action_arrow(y, group.id(), n);
            }
        }
        Bikoid { groupoid, l_map, r_map }
    }

    /// The welded bikoid of an abelian gr-group on the conjugation action
    /// groupoid of `G⋉A`: at objects `(z,a)`, `(w,b)`, the left holonomy is
    /// labelled `(w⁻¹, 0)` and the right holonomy `(1, −w⁻¹▷a)`.
    pub fn abelian_gr(gr: &AbelianGrGroup) -> Self {
        let sd = gr.semidirect();
        let n = sd.order();
        let a_n = gr.a().order();
        let groupoid = Arc::new(aut_groupoid(&sd));
        let mut l_map = vec![0; n * n];
        let mut r_map = vec![0; n * n];
        for x in 0..n {
            let (_, a) = pair_split(x, a_n);
            for y in 0..n {
                let (w, _) = pair_split(y, a_n);
                let w_inv = gr.g().inv(w);
                let l_label = pair_index(w_inv, gr.a().id(), a_n);
                let r_label =
                    pair_index(gr.g().id(), gr.a().inv(gr.action().apply(w_inv, a)), a_n);
                l_map[x * n + y] = action_arrow(x, l_label, n);
                r_map[x * n + y] = action_arrow(y, r_label, n);
            }
        }
        Bikoid { groupoid, l_map, r_map }
    }

    /// The underlying groupoid.
    pub fn groupoid(&self) -> &Groupoid {
        &self.groupoid
    }

    /// Shared handle to the underlying groupoid.
    pub fn groupoid_arc(&self) -> Arc<Groupoid> {
        Arc::clone(&self.groupoid)
    }

    /// The holonomy arrow `L(x, y)`.
    pub fn l(&self, x: usize, y: usize) -> usize {
        self.l_map[x * self.groupoid.objects() + y]
    }

    /// The holonomy arrow `R(x, y)`.
    pub fn r(&self, x: usize, y: usize) -> usize {
        self.r_map[x * self.groupoid.objects() + y]
    }

    /// The lower birack on objects: `x\y = tgt L(x,y)`, `y/x = tgt R(x,y)`.
    pub fn lower_birack(&self) -> Birack {
        let n = self.groupoid.objects();
        let mut over = vec![0; n * n];
        let mut under = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                over[x * n + y] = self.groupoid.tgt(self.r(x, y));
                under[x * n + y] = self.groupoid.tgt(self.l(x, y));
            }
        }
        Birack::from_flat(n, over, under)
    }

    /// The upper birack on morphisms: `γ\φ = γ ⋆ L(tgt γ, tgt φ)` and
    /// `φ/γ = φ ⋆ R(tgt γ, tgt φ)`. Fails if some composite is undefined
    /// (possible only when the holonomy sources are misplaced).
    pub fn upper_birack(&self) -> Result<Birack, Violation> {
        let g = self.groupoid.as_ref();
        let m = g.morphisms();
        let mut over = vec![0; m * m];
        let mut under = vec![0; m * m];
        for gamma in 0..m {
            for phi in 0..m {
                let (x, y) = (g.tgt(gamma), g.tgt(phi));
                over[gamma * m + phi] = g.compose(phi, self.r(x, y)).ok_or_else(|| {
                    Violation::new("upper over", vec![gamma, phi], "φ ⋆ R(tgt γ, tgt φ) undefined")
                })?;
                under[gamma * m + phi] = g.compose(gamma, self.l(x, y)).ok_or_else(|| {
                    Violation::new("upper under", vec![gamma, phi], "γ ⋆ L(tgt γ, tgt φ) undefined")
                })?;
            }
        }
        Ok(Birack::from_flat(m, over, under))
    }

    /// The two-strand wreath morphism `X⁺(x, y) = ((L(x,y), R(x,y)), t₁₂)`.
    pub fn x_plus(&self, x: usize, y: usize) -> WreathMorphism {
        WreathMorphism {
            arrows: vec![self.l(x, y), self.r(x, y)],
            perm: Perm::adjacent_swap(2, 0),
        }
    }

    /// The inverse crossing `X⁻(u, v)`, defined at `(u, v) = (y/x, x\y)` as
    /// the wreath inverse of `X⁺(x, y)`.
    pub fn x_minus(&self, u: usize, v: usize) -> Result<WreathMorphism, Violation> {
        let lower = self.lower_birack();
        let n = lower.size();
        let pre = lower.switch_perm()?.inverse().apply(u * n + v);
        Ok(wreath_inverse(&self.groupoid, &self.x_plus(pre / n, pre % n)))
    }

    /// `X⁺` acting at strands `(slot, slot+1)` of an object tuple, with
    /// identity arrows elsewhere.
    fn x_plus_embedded(&self, objects: &[usize], slot: usize) -> WreathMorphism {
        let g = self.groupoid.as_ref();
        let (x, y) = (objects[slot], objects[slot + 1]);
        let mut arrows: Vec<usize> = objects.iter().map(|&o| g.identity(o)).collect();
        arrows[slot] = self.l(x, y);
        arrows[slot + 1] = self.r(x, y);
        WreathMorphism { arrows, perm: Perm::adjacent_swap(objects.len(), slot) }
    }

    /// Exhaustively checks the bikoid axioms: holonomy sources, the lower
    /// birack axioms, and the three composition laws
    /// `L(x,y) ⋆ L(x\y, z) = L(x, z/y) ⋆ L(x\(z/y), y\z)`,
    /// `R(x,y) ⋆ L(y/x, z/(x\y)) = L(y,z) ⋆ R(x\(z/y), y\z)`,
    /// `R(x\y, z) ⋆ R(y/x, z/(x\y)) = R(y,z) ⋆ R(x, z/y)`.
    pub fn verify(&self) -> Result<(), Violation> {
        let g = self.groupoid.as_ref();
        let n = g.objects();
        if let Some(v) = crate::scan_range(n * n, |i| {
            let (x, y) = (i / n, i % n);
            if g.src(self.l(x, y)) != x {
                return Some(Violation::new("holonomy source", vec![x, y], "src L(x,y) ≠ x"));
            }
            if g.src(self.r(x, y)) != y {
                return Some(Violation::new("holonomy source", vec![x, y], "src R(x,y) ≠ y"));
            }
            None
        }) {
            return Err(v);
        }
        let lower = self.lower_birack();
        lower.verify()?;
        let comp = |f: usize, h: usize| g.compose(f, h);
        let found = crate::scan_range(n * n * n, |i| {
            let (x, y, z) = (i / (n * n), (i / n) % n, i % n);
            let xy = lower.under(x, y); // x\y
            let yx = lower.over(x, y); // y/x
            let zy = lower.over(y, z); // z/y
            let yz = lower.under(y, z); // y\z
            let z_xy = lower.over(xy, z); // z/(x\y)
            let x_zy = lower.under(x, zy); // x\(z/y)
            let eq1 = comp(self.l(x, y), self.l(xy, z)) == comp(self.l(x, zy), self.l(x_zy, yz));
            if !eq1 {
                return Some(Violation::new("exchange law L", vec![x, y, z], "L-composition law fails"));
            }
            let eq2 =
                comp(self.r(x, y), self.l(yx, z_xy)) == comp(self.l(y, z), self.r(x_zy, yz));
            if !eq2 {
                return Some(Violation::new("exchange law LR", vec![x, y, z], "mixed composition law fails"));
            }
            let eq3 = comp(self.r(xy, z), self.r(yx, z_xy)) == comp(self.r(y, z), self.r(x, zy));
            if !eq3 {
                return Some(Violation::new("exchange law R", vec![x, y, z], "R-composition law fails"));
            }
            None
        });
        match found {
            Some(v) => Err(v),
            None => Ok(()),
        }
    }

    /// Independent re-check of the exchange laws: composes the full
    /// three-strand wreath towers
    /// `X⁺₍₁₂₎ ⋆ X⁺₍₂₃₎ ⋆ X⁺₍₁₂₎ = X⁺₍₂₃₎ ⋆ X⁺₍₁₂₎ ⋆ X⁺₍₂₃₎`
    /// (crossings applied to whatever objects are current) and compares the
    /// resulting wreath morphisms.
    pub fn verify_three_strand_tower(&self) -> Result<(), Violation> {
        let g = self.groupoid.as_ref();
        let n = g.objects();
        let tower = |start: [usize; 3], slots: [usize; 3]| -> Result<WreathMorphism, Violation> {
            let mut acc = wreath_identity(g, &start);
            let mut objects = start.to_vec();
            for &s in &slots {
                let step = self.x_plus_embedded(&objects, s);
                acc = wreath_compose(g, &acc, &step)?;
                objects = crate::groupoid::wreath_target(g, &acc);
            }
            Ok(acc)
        };
        let found = crate::scan_range(n * n * n, |i| {
            let t = [i / (n * n), (i / n) % n, i % n];
            let lhs = match tower(t, [0, 1, 0]) {
                Ok(w) => w,
                Err(mut v) => {
                    v.witness = t.to_vec();
                    return Some(v);
                }
            };
            let rhs = match tower(t, [1, 0, 1]) {
                Ok(w) => w,
                Err(mut v) => {
                    v.witness = t.to_vec();
                    return Some(v);
                }
            };
            if lhs != rhs {
                Some(Violation::new(
                    "three-strand tower",
                    t.to_vec(),
                    "wreath towers disagree",
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

    /// Exhaustively checks the welded laws: the lower birack is welded and
    /// `L(x,z) = L(x, z/y)`, `L(y,z) = L(y, z/x)`,
    /// `R(x,z) ⋆ R(y, z/x) = R(y,z) ⋆ R(x, z/y)`.
    pub fn verify_welded(&self) -> Result<(), Violation> {
        let g = self.groupoid.as_ref();
        let lower = self.lower_birack();
        lower.verify_welded()?;
        let n = g.objects();
        let found = crate::scan_range(n * n * n, |i| {
            let (x, y, z) = (i / (n * n), (i / n) % n, i % n);
            let zx = lower.over(x, z); // z/x
            let zy = lower.over(y, z); // z/y
            if self.l(x, z) != self.l(x, zy) {
                return Some(Violation::new("welded L", vec![x, y, z], "L(x,z) ≠ L(x,z/y)"));
            }
            if self.l(y, z) != self.l(y, zx) {
                return Some(Violation::new("welded L", vec![x, y, z], "L(y,z) ≠ L(y,z/x)"));
            }
            if g.compose(self.r(x, z), self.r(y, zx)) != g.compose(self.r(y, z), self.r(x, zy)) {
                return Some(Violation::new(
                    "welded R",
                    vec![x, y, z],
                    "R(x,z) ⋆ R(y,z/x) ≠ R(y,z) ⋆ R(x,z/y)",
                ));
            }
            None
        });
        match found {
            Some(v) => Err(v),
            None => Ok(()),
        }
    }

    /// Essentiality of the bikoid = essentiality of its upper birack.
    /// `Ok(Some(witness))` = essential; `Ok(None)` = not essential;
    /// `Err` = the upper birack cannot be built.
    pub fn essentiality(&self) -> Result<Option<Violation>, Violation> {
        Ok(self.upper_birack()?.essentiality())
    }

    /// Computes the tri-state classification flags.
    pub fn classify(&self) -> BikoidClass {
        let is_bikoid = self.verify().is_ok();
        let is_welded = is_bikoid && self.verify_welded().is_ok();
        let is_essential = if is_welded {
            self.essentiality().ok().map(|w| w.is_some())
        } else {
            None
        };
        BikoidClass { is_bikoid, is_welded, is_essential }
    }

    /// Transports the bikoid along a groupoid isomorphism:
    /// `L′(x′, y′) = mor(L(obj⁻¹ x′, obj⁻¹ y′))` and likewise for `R`.
    pub fn transport(&self, iso: &GroupoidIso, codomain: Arc<Groupoid>) -> Result<Bikoid, BuildError> {
        let n = self.groupoid.objects();
        if codomain.objects() != n || codomain.morphisms() != self.groupoid.morphisms() {
            return Err(BuildError::Shape("codomain sizes differ from domain".into()));
        }
        let obj_inv = Perm::from_images(iso.obj_map.clone())
            .map_err(|_| BuildError::Shape("object map is not a bijection".into()))?
            .inverse();
        let mut l_map = vec![0; n * n];
        let mut r_map = vec![0; n * n];
        for xp in 0..n {
            for yp in 0..n {
                let (x, y) = (obj_inv.apply(xp), obj_inv.apply(yp));
                l_map[xp * n + yp] = iso.mor_map[self.l(x, y)];
                r_map[xp * n + yp] = iso.mor_map[self.r(x, y)];
            }
        }
        Ok(Bikoid { groupoid: codomain, l_map, r_map })
    }
}
