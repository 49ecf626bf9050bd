//! Named registry of ready-made structures — groups, abelian gr-groups,
//! crossed modules, biracks, bikoids and their groupoids — plus a JSON
//! descriptor loader for user-supplied ones. Every entry is validated when it
//! enters the catalog, and `verify_target` re-runs the full per-kind law
//! suites on demand.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bikoid::Bikoid;
use crate::birack::Birack;
use crate::braid_engine::{
    check_forbidden_reverse, crossing_degree, verify_relations, RelationReport,
};
use crate::core_algebra::{AbelianGrGroup, FiniteGroup, GroupAction, Violation};
use crate::crossed_module::{
    bikoid_gr_star, bikoid_r, trans_s2, trans_t2r, verify_gr_star_formulations, verify_r_formulas,
    CrossedModule,
};
use crate::groupoid::{aut_groupoid, Groupoid};
use crate::representation::{check_r_invertible, check_welded_r, check_ybe, Representation};

/// Errors raised while looking up or loading catalog entries.
#[derive(Debug, Error)]
pub enum CatalogError {
    /// A descriptor file could not be read.
    #[error("cannot read {path}: {source}")]
    Io {
        /// Offending path.
        path: String,
        /// Underlying I/O error.
        source: std::io::Error,
    },
    /// A descriptor file is not valid JSON of the expected shape.
    #[error("cannot parse {path}: {source}")]
    Parse {
        /// Offending path.
        path: String,
        /// Underlying JSON error.
        source: serde_json::Error,
    },
    /// Two entries of the same kind share a name.
    #[error("duplicate catalog name `{0}`")]
    Duplicate(String),
    /// An entry failed validation while being added.
    #[error("invalid catalog entry `{name}`: {detail}")]
    Invalid {
        /// Name of the rejected entry.
        name: String,
        /// What went wrong.
        detail: String,
    },
    /// No entry of any kind is registered under the name.
    #[error("unknown catalog name `{0}`")]
    Unknown(String),
}

/// How a registered bikoid was built, kept so that `verify_target` can re-run
/// the construction-specific dual-route checks.
#[derive(Debug, Clone)]
enum BikoidOrigin {
    /// Direct tables; only the generic suite applies.
    Direct,
    /// Pair-groupoid construction from the named abelian gr-group.
    GrStar {
        /// Catalog name of the gr-group.
        gr: String,
    },
    /// Twisted construction from the named abelian gr-group at offset `r`.
    Twisted {
        /// Catalog name of the gr-group.
        gr: String,
        /// Twisting element index.
        r: usize,
    },
}

/// A registered bikoid together with the registry name of its groupoid.
#[derive(Debug, Clone)]
pub struct CatalogBikoid {
    /// The bikoid itself.
    pub bikoid: Bikoid,
    /// Registry name of the groupoid the bikoid lives on.
    pub groupoid_name: String,
    origin: BikoidOrigin,
}

/// One line of a verification report: a named check and its outcome.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckLine {
    /// What was checked.
    pub check: String,
    /// `"pass"`, `"fail"`, or `"info"`.
    pub status: String,
    /// Elaboration: the counterexample on failure, facts on info lines.
    pub detail: String,
}

impl CheckLine {
    fn pass(check: impl Into<String>) -> Self {
        CheckLine { check: check.into(), status: "pass".into(), detail: String::new() }
    }

    fn fail(check: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckLine { check: check.into(), status: "fail".into(), detail: detail.into() }
    }

    fn info(check: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckLine { check: check.into(), status: "info".into(), detail: detail.into() }
    }

    fn of(check: impl Into<String>, outcome: Result<(), Violation>) -> Self {
        match outcome {
            Ok(()) => CheckLine::pass(check),
            Err(v) => CheckLine::fail(check, v.to_string()),
        }
    }
}

/// Verification report for one kind registered under a name.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KindReport {
    /// Kind of the entry (`"group"`, `"bikoid"`, ...).
    pub kind: String,
    /// Catalog name of the entry.
    pub name: String,
    /// Whether every non-info check passed.
    pub passed: bool,
    /// The individual check lines.
    pub checks: Vec<CheckLine>,
}

impl KindReport {
    fn from_checks(kind: &str, name: &str, checks: Vec<CheckLine>) -> Self {
        let passed = checks.iter().all(|c| c.status != "fail");
        KindReport { kind: kind.into(), name: name.into(), passed, checks }
    }
}

/// Reference to a group inside a descriptor: either the catalog name of a
/// group loaded earlier, or an inline multiplication table.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum GroupRef {
    /// Catalog name of an already-registered group.
    Name(String),
    /// Inline multiplication table with optional labels.
    Inline {
        mul: Vec<Vec<usize>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
}

/// One JSON catalog descriptor.
#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum Descriptor {
    /// A finite group given by its multiplication table.
    Group {
        name: String,
        mul: Vec<Vec<usize>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
    /// An abelian gr-group `(G, A, ▷)`.
    GrGroup {
        name: String,
        g: GroupRef,
        a: GroupRef,
        action: Vec<Vec<usize>>,
    },
    /// A crossed module `(∂: E → G, ▷)`.
    CrossedModule {
        name: String,
        g: GroupRef,
        e: GroupRef,
        boundary: Vec<usize>,
        action: Vec<Vec<usize>>,
    },
    /// A birack given by its over/under tables.
    Birack {
        name: String,
        size: usize,
        over: Vec<Vec<usize>>,
        under: Vec<Vec<usize>>,
    },
    /// A bikoid on the conjugation action groupoid of a group, given by its
    /// holonomy tables (morphism indices `x·|G| + g`).
    Bikoid {
        name: String,
        aut_of: GroupRef,
        l: Vec<Vec<usize>>,
        r: Vec<Vec<usize>>,
    },
}

/// The registry: name → structure maps for each kind, plus the groupoids the
/// registered bikoids live on.
#[derive(Debug, Default)]
pub struct Catalog {
    groups: BTreeMap<String, FiniteGroup>,
    grs: BTreeMap<String, AbelianGrGroup>,
    xmods: BTreeMap<String, CrossedModule>,
    biracks: BTreeMap<String, Birack>,
    bikoids: BTreeMap<String, CatalogBikoid>,
    groupoids: BTreeMap<String, Arc<Groupoid>>,
    /// group name → name of its registered conjugation action groupoid, so
    /// loaded bikoids over a known group share that groupoid.
    group_groupoids: BTreeMap<String, String>,
}

/// Strand count used by the relation suite inside `verify_target`.
const SUITE_STRANDS: usize = 3;

/// Order-search bound for info lines about crossing operators.
const ORDER_BOUND: u64 = 1 << 20;

impl Catalog {
    /// An empty catalog.
    pub fn new() -> Self {
        Catalog::default()
    }

    /// The built-in catalog: the groups `Z2`, `Z3`, `S3`; the abelian
    /// gr-group `Z2` acting on `Z3` by inversion; its crossed module and the
    /// identity crossed module of `S3`; the finite-group bikoids, the
    /// gr-group bikoid, the pair-groupoid bikoid and the three twisted
    /// bikoids, each with its groupoid registered under a stable name.
    pub fn builtin() -> Self {
        let mut cat = Catalog::new();

        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        let s3 = FiniteGroup::symmetric(3);
        cat.groups.insert("group:Z2".into(), z2.clone());
        cat.groups.insert("group:Z3".into(), z3.clone());
        cat.groups.insert("group:S3".into(), s3.clone());

        let inversion = GroupAction::from_table(2, 3, vec![vec![0, 1, 2], vec![0, 2, 1]])
            .expect("inversion table is rectangular");
        let gr = AbelianGrGroup::new(z2.clone(), z3.clone(), inversion)
            .expect("inversion acts on Z3 by automorphisms");
        cat.grs.insert("gr:Z2-Z3".into(), gr.clone());

        let cm = CrossedModule::from_abelian_gr(&gr);
        cm.verify().expect("abelian gr-group crossed module satisfies the laws");
        cat.xmods.insert("xmod:gr:Z2-Z3".into(), cm.clone());
        let cm_s3 = CrossedModule::identity(&s3);
        cm_s3.verify().expect("identity crossed module satisfies the laws");
        cat.xmods.insert("xmod:identity:S3".into(), cm_s3);

        for (suffix, group) in [("Z2", &z2), ("Z3", &z3), ("S3", &s3)] {
            let bk = Bikoid::finite_group(group);
            let groupoid_name = format!("aut:{suffix}");
            cat.groupoids.insert(groupoid_name.clone(), bk.groupoid_arc());
            cat.group_groupoids.insert(format!("group:{suffix}"), groupoid_name.clone());
            cat.bikoids.insert(
                format!("finite-group:{suffix}"),
                CatalogBikoid { bikoid: bk, groupoid_name, origin: BikoidOrigin::Direct },
            );
        }

        let bk_gr = Bikoid::abelian_gr(&gr);
        cat.groupoids.insert("aut:gr:Z2-Z3".into(), bk_gr.groupoid_arc());
        cat.bikoids.insert(
            "gr:Z2-Z3".into(),
            CatalogBikoid {
                bikoid: bk_gr,
                groupoid_name: "aut:gr:Z2-Z3".into(),
                origin: BikoidOrigin::Direct,
            },
        );

        let ts = trans_s2(&cm).expect("pair transport groupoid builds");
        let bk_star = bikoid_gr_star(&cm, &ts).expect("pair-groupoid bikoid builds");
        verify_gr_star_formulations(&cm, &ts, &bk_star)
            .expect("pair-groupoid tables match the projection route");
        cat.groupoids.insert("trans-pair:Z2-Z3".into(), bk_star.groupoid_arc());
        cat.bikoids.insert(
            "xmod-gr-star:Z2-Z3".into(),
            CatalogBikoid {
                bikoid: bk_star,
                groupoid_name: "trans-pair:Z2-Z3".into(),
                origin: BikoidOrigin::GrStar { gr: "gr:Z2-Z3".into() },
            },
        );

        for r in 0..cm.e().order() {
            let tt = trans_t2r(&cm, r).expect("twisted transport groupoid builds");
            let bk_r = bikoid_r(&cm, &ts, &tt).expect("twisted bikoid builds");
            verify_r_formulas(&cm, &tt, &bk_r)
                .expect("twisted tables match the closed forms");
            let groupoid_name = format!("trans-twisted:Z2-Z3:R={r}");
            cat.groupoids.insert(groupoid_name.clone(), bk_r.groupoid_arc());
            cat.bikoids.insert(
                format!("xmod-R:Z2-Z3:R={r}"),
                CatalogBikoid {
                    bikoid: bk_r,
                    groupoid_name,
                    origin: BikoidOrigin::Twisted { gr: "gr:Z2-Z3".into(), r },
                },
            );
        }

        cat
    }

    /// Looks up a group by name.
    pub fn group(&self, name: &str) -> Option<&FiniteGroup> {
        self.groups.get(name)
    }

    /// Looks up an abelian gr-group; a bare name like `Z2-Z3` also finds
    /// `gr:Z2-Z3`.
    pub fn gr(&self, name: &str) -> Option<&AbelianGrGroup> {
        self.grs.get(name).or_else(|| {
            if name.contains(':') {
                None
            } else {
                self.grs.get(&format!("gr:{name}"))
            }
        })
    }

    /// Looks up a crossed module by name.
    pub fn crossed_module(&self, name: &str) -> Option<&CrossedModule> {
        self.xmods.get(name)
    }

    /// Looks up a birack by name.
    pub fn birack(&self, name: &str) -> Option<&Birack> {
        self.biracks.get(name)
    }

    /// Looks up a bikoid; `finite-group-bikoid:X` is accepted as an alias for
    /// `finite-group:X`.
    pub fn bikoid(&self, name: &str) -> Option<&CatalogBikoid> {
        self.bikoids.get(name).or_else(|| {
            name.strip_prefix("finite-group-bikoid:")
                .and_then(|rest| self.bikoids.get(&format!("finite-group:{rest}")))
        })
    }

    /// Looks up a registered groupoid by name.
    pub fn groupoid(&self, name: &str) -> Option<&Arc<Groupoid>> {
        self.groupoids.get(name)
    }

    /// Names of all registered bikoids.
    pub fn bikoid_names(&self) -> Vec<String> {
        self.bikoids.keys().cloned().collect()
    }

    /// Every `(kind, name)` pair in the catalog, sorted by kind then name.
    pub fn entries(&self) -> Vec<(&'static str, String)> {
        let mut out = Vec::new();
        out.extend(self.bikoids.keys().map(|n| ("bikoid", n.clone())));
        out.extend(self.biracks.keys().map(|n| ("birack", n.clone())));
        out.extend(self.xmods.keys().map(|n| ("crossed-module", n.clone())));
        out.extend(self.grs.keys().map(|n| ("gr-group", n.clone())));
        out.extend(self.groups.keys().map(|n| ("group", n.clone())));
        out.extend(self.groupoids.keys().map(|n| ("groupoid", n.clone())));
        out
    }

    /// Resolves a representation spec for a named bikoid. Bare
    /// `right-regular` / `object-regular` build over the bikoid's groupoid; a
    /// qualified spec `right-regular:<groupoid>` names the groupoid
    /// explicitly and must agree with the bikoid's.
    pub fn representation(
        &self,
        bikoid_name: &str,
        spec: &str,
    ) -> Result<Representation, CatalogError> {
        let cb = self
            .bikoid(bikoid_name)
            .ok_or_else(|| CatalogError::Unknown(bikoid_name.into()))?;
        let (kind, explicit) = match spec.split_once(':') {
            Some((k, rest)) => (k, Some(rest)),
            None => (spec, None),
        };
        let arc = match explicit {
            None => cb.bikoid.groupoid_arc(),
            Some(gname) => {
                let arc = self
                    .groupoids
                    .get(gname)
                    .ok_or_else(|| CatalogError::Unknown(gname.into()))?;
                if !Arc::ptr_eq(arc, &cb.bikoid.groupoid_arc()) {
                    return Err(CatalogError::Invalid {
                        name: spec.into(),
                        detail: format!(
                            "groupoid `{gname}` is not the groupoid of bikoid `{bikoid_name}`"
                        ),
                    });
                }
                Arc::clone(arc)
            }
        };
        match kind {
            "right-regular" => Ok(Representation::right_regular(arc)),
            "object-regular" => Ok(Representation::object_regular(arc)),
            other => Err(CatalogError::Invalid {
                name: spec.into(),
                detail: format!(
                    "unknown representation `{other}` (expected right-regular or object-regular)"
                ),
            }),
        }
    }

    /// Runs the full verification suite for every kind registered under the
    /// name, one report per kind. Unknown names are an error.
    pub fn verify_target(&self, name: &str) -> Result<Vec<KindReport>, CatalogError> {
        let mut reports = Vec::new();
        if let Some(g) = self.group(name) {
            reports.push(group_suite(name, g));
        }
        if let Some(gr) = self.grs.get(name) {
            reports.push(gr_suite(name, gr));
        }
        if let Some(cm) = self.crossed_module(name) {
            reports.push(crossed_module_suite(name, cm));
        }
        if let Some(b) = self.birack(name) {
            reports.push(birack_suite(name, b));
        }
        if let Some(cb) = self.bikoid(name) {
            reports.push(self.bikoid_suite(name, cb));
        }
        if let Some(g) = self.groupoid(name) {
            reports.push(groupoid_suite(name, g));
        }
        if reports.is_empty() {
            return Err(CatalogError::Unknown(name.into()));
        }
        Ok(reports)
    }

    /// Loads every `*.json` descriptor file in a directory (in name order;
    /// each file holds one descriptor or an array of them). Entries are
    /// validated as they are added; the count of added entries is returned.
    pub fn load_dir(&mut self, dir: &Path) -> Result<usize, CatalogError> {
        let read_err = |source| CatalogError::Io { path: dir.display().to_string(), source };
        let mut paths: Vec<_> = fs::read_dir(dir)
            .map_err(read_err)?
            .collect::<Result<Vec<_>, _>>()
            .map_err(read_err)?
            .into_iter()
            .map(|e| e.path())
            .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
            .collect();
        paths.sort();
        let mut added = 0;
        for path in paths {
            let display = path.display().to_string();
            let text = fs::read_to_string(&path)
                .map_err(|source| CatalogError::Io { path: display.clone(), source })?;
            let parse_err =
                |source| CatalogError::Parse { path: display.clone(), source };
            let value: serde_json::Value = serde_json::from_str(&text).map_err(parse_err)?;
            let descriptors: Vec<Descriptor> = if value.is_array() {
                serde_json::from_value(value).map_err(parse_err)?
            } else {
                vec![serde_json::from_value(value).map_err(parse_err)?]
            };
            for d in descriptors {
                self.add_descriptor(d)?;
                added += 1;
            }
        }
        Ok(added)
    }

    fn resolve_group(&self, r: GroupRef, ctx: &str) -> Result<FiniteGroup, CatalogError> {
        match r {
            GroupRef::Name(name) => self
                .group(&name)
                .cloned()
                .ok_or(CatalogError::Unknown(name)),
            GroupRef::Inline { mul, labels } => {
                let g = FiniteGroup::from_mul_table(mul, labels).map_err(|e| {
                    CatalogError::Invalid { name: ctx.into(), detail: e.to_string() }
                })?;
                g.verify().map_err(|v| CatalogError::Invalid {
                    name: ctx.into(),
                    detail: v.to_string(),
                })?;
                Ok(g)
            }
        }
    }

    /// The registry name of a group reference, when it has one.
    fn group_ref_name(r: &GroupRef) -> Option<&str> {
        match r {
            GroupRef::Name(n) => Some(n),
            GroupRef::Inline { .. } => None,
        }
    }

    fn add_descriptor(&mut self, d: Descriptor) -> Result<(), CatalogError> {
        let invalid = |name: &str, detail: String| CatalogError::Invalid {
            name: name.into(),
            detail,
        };
        match d {
            Descriptor::Group { name, mul, labels } => {
                if self.groups.contains_key(&name) {
                    return Err(CatalogError::Duplicate(name));
                }
                let g = FiniteGroup::from_mul_table(mul, labels)
                    .map_err(|e| invalid(&name, e.to_string()))?;
                g.verify().map_err(|v| invalid(&name, v.to_string()))?;
                self.groups.insert(name, g);
            }
            Descriptor::GrGroup { name, g, a, action } => {
                if self.grs.contains_key(&name) {
                    return Err(CatalogError::Duplicate(name));
                }
                let g = self.resolve_group(g, &name)?;
                let a = self.resolve_group(a, &name)?;
                let action = GroupAction::from_table(g.order(), a.order(), action)
                    .map_err(|e| invalid(&name, e.to_string()))?;
                let gr = AbelianGrGroup::new(g, a, action)
                    .map_err(|e| invalid(&name, e.to_string()))?;
                self.grs.insert(name, gr);
            }
            Descriptor::CrossedModule { name, g, e, boundary, action } => {
                if self.xmods.contains_key(&name) {
                    return Err(CatalogError::Duplicate(name));
                }
                let g = self.resolve_group(g, &name)?;
                let e = self.resolve_group(e, &name)?;
                let action = GroupAction::from_table(g.order(), e.order(), action)
                    .map_err(|er| invalid(&name, er.to_string()))?;
                let cm = CrossedModule::new(g, e, boundary, action)
                    .map_err(|er| invalid(&name, er.to_string()))?;
                cm.verify().map_err(|v| invalid(&name, v.to_string()))?;
                self.xmods.insert(name, cm);
            }
            Descriptor::Birack { name, size, over, under } => {
                if self.biracks.contains_key(&name) {
                    return Err(CatalogError::Duplicate(name));
                }
                let b = Birack::new(size, over, under)
                    .map_err(|e| invalid(&name, e.to_string()))?;
                b.verify().map_err(|v| invalid(&name, v.to_string()))?;
                self.biracks.insert(name, b);
            }
            Descriptor::Bikoid { name, aut_of, l, r } => {
                if self.bikoids.contains_key(&name) {
                    return Err(CatalogError::Duplicate(name));
                }
                let group_name = Self::group_ref_name(&aut_of).map(str::to_owned);
                let group = self.resolve_group(aut_of, &name)?;
                // Reuse the registered groupoid of a named group so that the
                // loaded bikoid interoperates with its representations.
                let registered = group_name
                    .as_deref()
                    .and_then(|gn| self.group_groupoids.get(gn))
                    .cloned();
                let (groupoid_name, arc) = match registered {
                    Some(gname) => {
                        let arc = Arc::clone(&self.groupoids[&gname]);
                        (gname, arc)
                    }
                    None => {
                        let gname = format!("aut:{name}");
                        if self.groupoids.contains_key(&gname) {
                            return Err(CatalogError::Duplicate(gname));
                        }
                        (gname, Arc::new(aut_groupoid(&group)))
                    }
                };
                let bk = Bikoid::new(arc, l, r).map_err(|e| invalid(&name, e.to_string()))?;
                bk.verify().map_err(|v| invalid(&name, v.to_string()))?;
                if !self.groupoids.contains_key(&groupoid_name) {
                    self.groupoids.insert(groupoid_name.clone(), bk.groupoid_arc());
                    if let Some(gn) = group_name {
                        self.group_groupoids.insert(gn, groupoid_name.clone());
                    }
                }
                self.bikoids.insert(
                    name,
                    CatalogBikoid { bikoid: bk, groupoid_name, origin: BikoidOrigin::Direct },
                );
            }
        }
        Ok(())
    }

    fn bikoid_suite(&self, name: &str, cb: &CatalogBikoid) -> KindReport {
        let bk = &cb.bikoid;
        let mut checks = vec![
            CheckLine::of("bikoid axioms", bk.verify()),
            CheckLine::of("three-strand tower", bk.verify_three_strand_tower()),
            CheckLine::of("welded laws", bk.verify_welded()),
        ];

        let lower = bk.lower_birack();
        checks.push(CheckLine::of("lower birack axioms", lower.verify()));
        checks.push(CheckLine::of("lower birack welded laws", lower.verify_welded()));
        match bk.upper_birack() {
            Ok(upper) => {
                checks.push(CheckLine::of("upper birack axioms", upper.verify()));
                checks.push(CheckLine::of("upper birack welded laws", upper.verify_welded()));
            }
            Err(v) => checks.push(CheckLine::fail("upper birack axioms", v.to_string())),
        }

        checks.push(CheckLine::of("crossing element invertible", check_r_invertible(bk)));
        checks.push(CheckLine::of("Yang-Baxter identity", check_ybe(bk)));
        checks.push(CheckLine::of("welded commutation identity", check_welded_r(bk)));

        for spec in ["right-regular", "object-regular"] {
            match self.representation(name, spec) {
                Ok(rep) => {
                    checks.push(CheckLine::of(
                        format!("{spec} representation axioms"),
                        rep.verify(),
                    ));
                    checks.push(CheckLine::of(
                        format!("{spec} representation unitarity"),
                        rep.verify_unitary(),
                    ));
                }
                Err(e) => checks.push(CheckLine::fail(
                    format!("{spec} representation axioms"),
                    e.to_string(),
                )),
            }
        }

        match self.representation(name, "object-regular") {
            Ok(rep) => match verify_relations(bk, &rep, SUITE_STRANDS) {
                Ok(reports) => checks.extend(relation_lines(&reports)),
                Err(v) => checks.push(CheckLine::fail("relation suite", v.to_string())),
            },
            Err(e) => checks.push(CheckLine::fail("relation suite", e.to_string())),
        }

        match bk.essentiality() {
            Ok(Some(w)) => checks.push(CheckLine::info("essential", format!("yes ({w})"))),
            Ok(None) => checks.push(CheckLine::info("essential", "no")),
            Err(v) => checks.push(CheckLine::fail("essentiality", v.to_string())),
        }
        if let Ok(rep) = self.representation(name, "object-regular") {
            match check_forbidden_reverse(bk, &rep) {
                Ok(rep) if rep.holds => {
                    checks.push(CheckLine::info("forbidden under-commutation", "holds"));
                }
                Ok(rep) => checks.push(CheckLine::info(
                    "forbidden under-commutation",
                    format!("fails at {:?}", rep.witness.unwrap_or_default()),
                )),
                Err(v) => checks.push(CheckLine::fail("forbidden under-commutation", v.to_string())),
            }
        }
        for spec in ["object-regular", "right-regular"] {
            if let Ok(rep) = self.representation(name, spec) {
                match crossing_degree(bk, &rep, ORDER_BOUND) {
                    Ok(order) => checks.push(CheckLine::info(
                        format!("crossing operator order ({spec})"),
                        order.to_string(),
                    )),
                    Err(v) => checks.push(CheckLine::fail(
                        format!("crossing operator order ({spec})"),
                        v.to_string(),
                    )),
                }
            }
        }

        checks.extend(self.origin_checks(cb));
        KindReport::from_checks("bikoid", name, checks)
    }

    /// Construction-specific dual-route checks for bikoids built from a
    /// crossed-module tower.
    fn origin_checks(&self, cb: &CatalogBikoid) -> Vec<CheckLine> {
        let rebuild = |gr_name: &str| -> Result<CrossedModule, Violation> {
            let gr = self.gr(gr_name).ok_or_else(|| {
                Violation::new("catalog lookup", vec![], format!("gr-group `{gr_name}` missing"))
            })?;
            Ok(CrossedModule::from_abelian_gr(gr))
        };
        match &cb.origin {
            BikoidOrigin::Direct => Vec::new(),
            BikoidOrigin::GrStar { gr } => {
                let outcome = rebuild(gr).and_then(|cm| {
                    let ts = trans_s2(&cm).map_err(|e| {
                        Violation::new("pair transport groupoid", vec![], e.to_string())
                    })?;
                    verify_gr_star_formulations(&cm, &ts, &cb.bikoid)
                });
                vec![CheckLine::of("pair-groupoid closed forms (dual route)", outcome)]
            }
            BikoidOrigin::Twisted { gr, r } => {
                let outcome = rebuild(gr).and_then(|cm| {
                    let tt = trans_t2r(&cm, *r).map_err(|e| {
                        Violation::new("twisted transport groupoid", vec![], e.to_string())
                    })?;
                    verify_r_formulas(&cm, &tt, &cb.bikoid)
                });
                vec![CheckLine::of("twisted closed forms (dual route)", outcome)]
            }
        }
    }
}

fn group_suite(name: &str, g: &FiniteGroup) -> KindReport {
    let checks = vec![
        CheckLine::of("group axioms", g.verify()),
        CheckLine::info("order", g.order().to_string()),
        CheckLine::info("abelian", if g.is_abelian() { "yes" } else { "no" }),
    ];
    KindReport::from_checks("group", name, checks)
}

fn gr_suite(name: &str, gr: &AbelianGrGroup) -> KindReport {
    let mut checks = vec![
        CheckLine::of("acting group axioms", gr.g().verify()),
        CheckLine::of("coefficient group axioms", gr.a().verify()),
    ];
    checks.push(if gr.a().is_abelian() {
        CheckLine::pass("coefficient group abelian")
    } else {
        CheckLine::fail("coefficient group abelian", "has non-commuting elements")
    });
    checks.push(CheckLine::of("action laws", gr.action().verify_action(gr.g())));
    checks.push(CheckLine::of(
        "action by automorphisms",
        gr.action().verify_automorphism(gr.g(), gr.a()),
    ));
    checks.push(CheckLine::of("semidirect product axioms", gr.semidirect().verify()));
    KindReport::from_checks("gr-group", name, checks)
}

fn crossed_module_suite(name: &str, cm: &CrossedModule) -> KindReport {
    let mut checks = vec![CheckLine::of("crossed-module laws", cm.verify())];
    match cm.kernel() {
        Ok((k, _)) => checks.push(CheckLine::info("boundary kernel order", k.order().to_string())),
        Err(e) => checks.push(CheckLine::fail("boundary kernel", e.to_string())),
    }
    match cm.cokernel() {
        Ok((q, _)) => checks.push(CheckLine::info("cokernel order", q.order().to_string())),
        Err(e) => checks.push(CheckLine::fail("cokernel", e.to_string())),
    }
    KindReport::from_checks("crossed-module", name, checks)
}

fn birack_suite(name: &str, b: &Birack) -> KindReport {
    let mut checks = vec![
        CheckLine::of("birack axioms", b.verify()),
        CheckLine::of("welded laws", b.verify_welded()),
    ];
    match b.essentiality() {
        Some(w) => checks.push(CheckLine::info("essential", format!("yes ({w})"))),
        None => checks.push(CheckLine::info("essential", "no")),
    }
    KindReport::from_checks("birack", name, checks)
}

fn groupoid_suite(name: &str, g: &Groupoid) -> KindReport {
    let checks = vec![
        CheckLine::of("groupoid axioms", g.verify()),
        CheckLine::info("objects", g.objects().to_string()),
        CheckLine::info("morphisms", g.morphisms().to_string()),
    ];
    KindReport::from_checks("groupoid", name, checks)
}

fn relation_lines(reports: &[RelationReport]) -> Vec<CheckLine> {
    reports
        .iter()
        .map(|r| {
            let check = format!("relation: {} (n={})", r.relation, r.n);
            if r.passed() {
                CheckLine::pass(check)
            } else {
                CheckLine::fail(check, format!("differs at {:?}", r.witness))
            }
        })
        .collect()
}
