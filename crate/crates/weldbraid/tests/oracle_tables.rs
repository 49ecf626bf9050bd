//! Frozen structural tables, each value recomputed through an independent
//! route (closed-form counts, brute-force enumeration, or a second algorithm)
//! so that a regression in any constructor shows up as a table mismatch.

use weldbraid::braid_engine::{crossing_degree, underlying_permutation, BraidWord};
use weldbraid::catalog::Catalog;
use weldbraid::core_algebra::FiniteGroup;
use weldbraid::crossed_module::{build_t2r, trans_s2, CrossedModule};
use weldbraid::representation::{r_element, OperatorOrder};
use weldbraid::topology_oracle::run_single_generator_sweep;

const ORDER_BOUND: u64 = 1 << 20;

/// Object and morphism counts of every built-in groupoid, against the closed
/// formulas: a conjugation groupoid on `G` has `|G|` objects and `|G|²`
/// arrows, and a transport groupoid has one arrow per (point, actor) pair.
#[test]
fn groupoid_sizes_match_closed_formulas() {
    let cat = Catalog::builtin();
    let expected = [
        ("aut:Z2", 2, 4),
        ("aut:Z3", 3, 9),
        ("aut:S3", 6, 36),
        ("aut:gr:Z2-Z3", 6, 36),
        ("trans-pair:Z2-Z3", 6, 108),
        ("trans-twisted:Z2-Z3:R=0", 6, 108),
        ("trans-twisted:Z2-Z3:R=1", 6, 108),
        ("trans-twisted:Z2-Z3:R=2", 6, 108),
    ];
    for (name, objects, morphisms) in expected {
        let g = cat.groupoid(name).unwrap_or_else(|| panic!("missing groupoid {name}"));
        assert_eq!(g.objects(), objects, "{name}: object count");
        assert_eq!(g.morphisms(), morphisms, "{name}: morphism count");
    }
    let gr = cat.gr("gr:Z2-Z3").expect("builtin gr");
    let cm = CrossedModule::from_abelian_gr(gr);
    let ts = trans_s2(&cm).expect("transport groupoid");
    assert_eq!(ts.actor().order(), 18, "semidirect actor on the pair group");
}

/// The twisted-pair group is re-counted by brute force straight from its
/// membership constraint `∂e = [∂R, g]`, without going through the dedicated
/// constructor.
#[test]
fn twisted_pair_membership_matches_brute_force_enumeration() {
    // Trivial boundary: the constraint is vacuous and every pair qualifies.
    let cat = Catalog::builtin();
    let gr = cat.gr("gr:Z2-Z3").expect("builtin gr");
    let cm = CrossedModule::from_abelian_gr(gr);
    for r in 0..cm.e().order() {
        let brute = (0..cm.g().order())
            .flat_map(|g| (0..cm.e().order()).map(move |e| (g, e)))
            .filter(|&(g, e)| {
                cm.boundary(e) == cm.g().commutator(cm.boundary(r), g)
            })
            .count();
        assert_eq!(brute, 6, "vacuous constraint keeps all pairs");
        assert_eq!(build_t2r(&cm, r).expect("twisted pairs").order(), brute);
    }

    // Identity boundary on S₃: the second component is forced to equal the
    // commutator, leaving exactly one pair per group element.
    let s3 = FiniteGroup::symmetric(3);
    let id_cm = CrossedModule::identity(&s3);
    let r = (0..s3.order())
        .find(|&x| s3.element_order(x) == 3)
        .expect("S₃ has a 3-cycle");
    let brute: Vec<(usize, usize)> = (0..s3.order())
        .flat_map(|g| (0..s3.order()).map(move |e| (g, e)))
        .filter(|&(g, e)| e == s3.commutator(r, g))
        .collect();
    assert_eq!(brute.len(), 6, "one forced pair per group element");
    let t = build_t2r(&id_cm, r).expect("twisted pairs over S₃");
    assert_eq!(t.order(), brute.len());
    for &(g, e) in &brute {
        assert!(t.index_of(g, e).is_some(), "({g},{e}) missing from the constructed group");
    }
}

/// The two-strand crossing operator on the object-regular (resp.
/// right-regular) representation permutes the object-pair (resp. arrow-pair)
/// basis exactly as the lower (resp. upper) birack switch does, so its
/// multiplicative order must equal the switch permutation's order.
#[test]
fn crossing_operator_orders_match_switch_permutation_orders() {
    let cat = Catalog::builtin();
    for name in cat.bikoid_names() {
        let bk = &cat.bikoid(&name).expect("listed bikoid").bikoid;
        let lower = bk.lower_birack().switch_perm().expect("lower switch").order();
        let upper = bk
            .upper_birack()
            .expect("welded catalog entries have upper biracks")
            .switch_perm()
            .expect("upper switch")
            .order();
        for (spec, want) in [("object-regular", lower), ("right-regular", upper)] {
            let rep = cat.representation(&name, spec).expect("catalog representation");
            match crossing_degree(bk, &rep, ORDER_BOUND).expect("finite order") {
                OperatorOrder::Finite(d) => {
                    assert_eq!(d, want, "{name}/{spec}: operator vs switch order")
                }
                other => panic!("{name}/{spec}: unexpected outcome {other:?}"),
            }
        }
    }
}

/// The four published two-strand degree values, pinned as exact constants,
/// together with the operator dimensions they are computed at.
#[test]
fn two_strand_degree_table_is_frozen() {
    let cat = Catalog::builtin();
    let table = [
        ("finite-group:Z2", "object-regular", 2u128, 2usize),
        ("finite-group:Z2", "right-regular", 4, 4),
        ("xmod-gr-star:Z2-Z3", "object-regular", 12, 6),
        ("xmod-gr-star:Z2-Z3", "right-regular", 12, 108),
    ];
    for (name, spec, degree, dim) in table {
        let bk = &cat.bikoid(name).expect("catalog bikoid").bikoid;
        let rep = cat.representation(name, spec).expect("catalog representation");
        assert_eq!(rep.dim(), dim, "{name}/{spec}: per-strand dimension");
        assert_eq!(
            crossing_degree(bk, &rep, ORDER_BOUND).expect("finite order"),
            OperatorOrder::Finite(degree),
            "{name}/{spec}: two-strand crossing degree"
        );
    }
}

/// The crossing element has exactly one term per ordered object pair.
#[test]
fn crossing_element_term_counts_match_object_counts() {
    let cat = Catalog::builtin();
    for name in cat.bikoid_names() {
        let bk = &cat.bikoid(&name).expect("listed bikoid").bikoid;
        let objects = bk.groupoid().objects();
        assert_eq!(
            r_element(bk).term_count(),
            objects * objects,
            "{name}: one term per object pair"
        );
    }
}

/// Kernel and cokernel orders of the built-in crossed modules: the trivial
/// boundary keeps all of the top group in the kernel and all of the base in
/// the cokernel, while an identity boundary kills both.
#[test]
fn kernel_and_cokernel_orders_are_frozen() {
    let cat = Catalog::builtin();
    let gr_cm = cat.crossed_module("xmod:gr:Z2-Z3").expect("builtin crossed module");
    assert_eq!(gr_cm.kernel().expect("kernel").0.order(), 3);
    assert_eq!(gr_cm.cokernel().expect("cokernel").0.order(), 2);

    let id_cm = cat.crossed_module("xmod:identity:S3").expect("builtin crossed module");
    assert_eq!(id_cm.kernel().expect("kernel").0.order(), 1);
    assert_eq!(id_cm.cokernel().expect("cokernel").0.order(), 1);

    let ad_s3 = CrossedModule::ad(&FiniteGroup::symmetric(3));
    assert_eq!(ad_s3.kernel().expect("kernel").0.order(), 1, "S₃ has trivial center");
    assert_eq!(ad_s3.cokernel().expect("cokernel").0.order(), 1, "all of S₃ is inner");
}

/// Strand bookkeeping for a fixed word: crossing strands 1,2 and then 2,3
/// cycles the three strands, and the cycle has order three.
#[test]
fn strand_permutation_images_are_frozen() {
    let word = BraidWord::parse("S+1 S+2", 3).expect("valid word");
    let p = underlying_permutation(&word);
    assert_eq!(p.images(), &[2, 0, 1]);
    assert_eq!(p.order(), 3);
}

/// The exhaustive two-strand sweep covers three single-generator words
/// against all 36 colour tuples.
#[test]
fn single_generator_sweep_case_count_is_frozen() {
    let cat = Catalog::builtin();
    let gr = cat.gr("gr:Z2-Z3").expect("builtin gr");
    assert_eq!(run_single_generator_sweep(gr).expect("sweep passes"), 108);
}
