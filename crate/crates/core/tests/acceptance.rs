//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use eicat_core::algebra::{CategoryAlgebra, GroupAlgebra};
use eicat_core::category::{FiniteCategory, Species};
use eicat_core::field::{Field, FieldSpec, FieldVisitor};
use eicat_core::grid::{grid_cells, grid_species, run_grid, GRID_CHARACTERISTICS};
use eicat_core::group::FiniteGroup;
use eicat_core::resolution::{global_dimension, Predicted, ProjectiveDimension};
use eicat_core::verify::{verify_properties, Status, VerifyOptions, VerifyReport};

/// The grid must finish within this wall-clock time.
const GRID_TIME_LIMIT: Duration = Duration::from_secs(120);
/// Random modules per cell for the randomized criteria.
const SAMPLES: usize = 20;
/// Categories whose structure-constant algebra is checked directly stay
/// below this dimension.
const MAX_ALGEBRA_DIM: usize = 100;

struct Line {
    pass: bool,
    text: String,
}

fn fields() -> Vec<FieldSpec> {
    GRID_CHARACTERISTICS.iter().map(|&c| FieldSpec::from_characteristic(c).expect("grid field")).collect()
}

fn category(species: &Species, n: usize) -> Arc<FiniteCategory> {
    Arc::new(FiniteCategory::build(species.clone(), n).expect("grid category"))
}

fn semisimple(species: &Species, n: usize, field: FieldSpec) -> bool {
    let c = category(species, n);
    (0..=n).all(|x| !field.divides(c.hom_size(x, x) as u128))
}

struct Verify {
    category: Arc<FiniteCategory>,
    options: VerifyOptions,
    names: &'static [&'static str],
}

impl FieldVisitor for Verify {
    type Output = VerifyReport;
    fn visit<F: Field>(self, f: F) -> VerifyReport {
        verify_properties(self.category, f, &self.options, self.names).expect("known properties")
    }
}

#[derive(Default)]
struct SuiteResult {
    failures: Vec<String>,
    skips: Vec<String>,
    cases: usize,
    reports: Vec<VerifyReport>,
}

/// Runs `names` over every listed cell.
fn suite(cells: &[(Species, usize, FieldSpec)], names: &'static [&'static str], headroom: impl Fn(usize) -> usize) -> SuiteResult {
    let mut r = SuiteResult::default();
    for (species, n, field) in cells {
        let options = VerifyOptions { samples: SAMPLES, headroom: headroom(*n), ..VerifyOptions::new(*n) };
        let report = field.dispatch(Verify { category: category(species, *n), options, names });
        for p in &report.properties {
            let cell = format!("{} n={} {} {}", species.describe(), n, report.field, p.name);
            match p.status {
                Status::Pass => r.cases += p.cases,
                Status::Fail => r.failures.push(format!("{cell}: {}", p.detail)),
                Status::Skipped => r.skips.push(format!("{cell}: {}", p.detail)),
            }
        }
        r.reports.push(report);
    }
    r
}

fn cells(n_max: usize, only_semisimple: bool) -> Vec<(Species, usize, FieldSpec)> {
    let mut out = Vec::new();
    for species in grid_species() {
        for n in 0..=n_max {
            for field in fields() {
                if !only_semisimple || semisimple(&species, n, field) {
                    out.push((species.clone(), n, field));
                }
            }
        }
    }
    out
}

fn global_dimension_grid() -> Line {
    let start = Instant::now();
    let cells = grid_cells(&grid_species(), 3, &fields());
    let threads = std::thread::available_parallelism().map_or(1, |p| p.get().min(4));
    let reports = run_grid(&cells, |c| c.default_bound(), threads).expect("grid runs");
    let elapsed = start.elapsed();
    let mut problems: Vec<String> = cells
        .iter()
        .zip(&reports)
        .filter(|(_, r)| !r.agrees)
        .map(|(c, r)| format!("{} n={} {}: predicted {} computed {}", c.species.describe(), c.n, r.field, r.predicted, r.computed))
        .collect();

    let c2 = Arc::new(FiniteGroup::cyclic(2).expect("C_2"));
    let finite = |m| (Predicted::Finite(m), ProjectiveDimension::Exact(m as i64));
    let infinite = |b| (Predicted::Infinite, ProjectiveDimension::ExceedsBound(b));
    let pinned: Vec<(Species, usize, u64, (Predicted, ProjectiveDimension))> = vec![
        (Species::Fi, 2, 3, finite(2)),
        (Species::Fi, 2, 2, infinite(6)),
        (Species::Oi, 3, 0, finite(3)),
        (Species::Oi, 3, 2, finite(3)),
        (Species::Oi, 3, 3, finite(3)),
        (Species::Oi, 3, 5, finite(3)),
        (Species::OiG(c2.clone()), 2, 3, finite(2)),
        (Species::OiG(c2), 2, 2, infinite(6)),
        (Species::FiD(2), 2, 5, finite(2)),
        (Species::Vi(2), 2, 5, finite(2)),
        (Species::Vi(2), 2, 2, infinite(6)),
        (Species::Vi(2), 2, 3, infinite(6)),
    ];
    for (species, n, c, expected) in &pinned {
        let found =
            cells.iter().zip(&reports).find(|(cell, _)| &cell.species == species && cell.n == *n && cell.field.characteristic() == *c);
        match found {
            Some((_, r)) if (r.predicted, r.computed) == *expected => {}
            Some((_, r)) => problems.push(format!(
                "{} n={n} {}: expected {} / {}, got {} / {}",
                species.describe(),
                r.field,
                expected.0,
                expected.1,
                r.predicted,
                r.computed
            )),
            None => problems.push(format!("{} n={n} char {c}: cell missing", species.describe())),
        }
    }
    if elapsed > GRID_TIME_LIMIT {
        problems.push(format!("took {elapsed:.1?}, limit {GRID_TIME_LIMIT:?}"));
    }
    Line {
        pass: problems.is_empty(),
        text: format!("global dimension grid: {} cells, {} pinned values, {elapsed:.1?}{}", cells.len(), pinned.len(), summary(&problems)),
    }
}

fn summary(problems: &[String]) -> String {
    match problems.first() {
        None => String::new(),
        Some(p) => format!("; {} problem(s), first: {p}", problems.len()),
    }
}

fn from_suite(label: &str, SuiteResult { failures, skips, cases, .. }: SuiteResult, cells: usize) -> Line {
    let mut text = format!("{label}: {cells} cells, {cases} checks");
    if !skips.is_empty() {
        text.push_str(&format!(", {} skipped (first: {})", skips.len(), skips[0]));
    }
    text.push_str(&summary(&failures));
    Line { pass: failures.is_empty() && cases > 0, text }
}

fn semisimple_cells() -> Line {
    let cells = cells(3, true);
    let result = suite(&cells, &["simples_have_linear_resolutions", "pd_of_bottom_simple"], |n| n);
    from_suite("semisimple cells: linear resolutions of S_0 and every built-in S_x (n <= 3)", result, cells.len())
}

fn oracle_equivalence() -> Line {
    let cells = cells(2, true);
    let result = suite(&cells, &["ext_matches_minimal_hom"], |n| n);
    from_suite("oracle equivalence: free Ext against A/J = minimal Hom, s <= n + 2 (n <= 2)", result, cells.len())
}

const FUNCTOR_SUITE: &[&str] = &[
    "h0_commutes_with_restriction",
    "h0_of_lift",
    "restriction_of_lift_is_identity",
    "restriction_and_lift_exact",
    "restricted_projectives_are_projective",
    "cover_restriction",
    "betti_restriction",
];

fn functor_suite() -> Line {
    let cells = cells(2, false);
    let result = suite(&cells, FUNCTOR_SUITE, |n| n + 2);
    let short: Vec<String> =
        result.reports.iter().filter(|r| r.headroom < r.n + 2).map(|r| format!("{} n={} {}", r.species, r.n, r.field)).collect();
    let mut line = from_suite("functor suite with N = n + 2 (n <= 2)", result, cells.len());
    if !short.is_empty() {
        line.pass = false;
        line.text.push_str(&format!("; headroom below n + 2 for {short:?}"));
    }
    line
}

fn genetic_shift() -> Line {
    let cells = cells(3, true);
    let result = suite(&cells, &["genetic_shift"], |n| n + 1);
    from_suite("genetic shift: 1 <= x <= n, shifts of kC_{n+1} e_x (n <= 3)", result, cells.len())
}

struct Radicals {
    category: Arc<FiniteCategory>,
}

impl FieldVisitor for Radicals {
    type Output = Vec<String>;
    fn visit<F: Field>(self, f: F) -> Vec<String> {
        let c = &self.category;
        let mut problems = Vec::new();
        let label = format!("{} n={} {}", c.species().describe(), c.n(), f.spec());
        for x in 0..=c.n() {
            let order = c.hom_size(x, x);
            let j = GroupAlgebra::new(f.clone(), c.aut_group(x)).radical();
            if j.is_zero() == f.spec().divides(order as u128) {
                problems.push(format!("{label}: J(kAut({x})) has dim {} with |Aut| = {order}", j.dim()));
            }
        }
        if c.total() <= MAX_ALGEBRA_DIM {
            let algebra = CategoryAlgebra::new(c.clone(), f.clone());
            if !algebra.validate_radical(&algebra.radical()) {
                problems.push(format!("{label}: radical is not nilpotent with semisimple quotient"));
            }
        }
        problems
    }
}

/// `(dim J, dim J)` through the direct and the structure-constant routes.
struct GroupRadical {
    group: FiniteGroup,
}

impl FieldVisitor for GroupRadical {
    type Output = (usize, usize);
    fn visit<F: Field>(self, f: F) -> (usize, usize) {
        let a = GroupAlgebra::new(f, Arc::new(self.group));
        (a.radical().dim(), a.radical_generic().dim())
    }
}

const BUILTIN_GROUPS: [&str; 8] = ["c1", "c2", "c3", "c4", "c5", "c6", "s3", "klein"];

fn radical_suite() -> Line {
    let mut problems = Vec::new();
    let mut checked = 0;
    for (species, n, field) in cells(3, false) {
        problems.extend(field.dispatch(Radicals { category: category(&species, n) }));
        checked += 1;
    }
    for name in BUILTIN_GROUPS {
        for field in fields() {
            let group = FiniteGroup::builtin(name).expect("built-in group");
            let order = group.order() as u128;
            let (direct, generic) = field.dispatch(GroupRadical { group });
            if (direct == 0) == field.divides(order) || direct != generic {
                problems.push(format!("J(k{name}) over char {}: dim {direct} (generic {generic})", field.characteristic()));
            }
        }
    }
    let s2 = FiniteGroup::cyclic(2).expect("S_2");
    for (name, group, c, expected) in [("F_2 S_2", s2, 2, 1), ("F_3 S_3", FiniteGroup::s3(), 3, 4)] {
        let (direct, generic) = FieldSpec::from_characteristic(c).expect("prime").dispatch(GroupRadical { group });
        if direct != expected || generic != expected {
            problems.push(format!("J({name}): dim {direct} (generic {generic}), expected {expected}"));
        }
    }
    Line {
        pass: problems.is_empty(),
        text: format!(
            "radical suite: {} built-in groups and {checked} categories over 4 fields, J(F_2 S_2) = 1, J(F_3 S_3) = 4{}",
            BUILTIN_GROUPS.len(),
            summary(&problems)
        ),
    }
}

fn hom_counts() -> Line {
    let mut problems = Vec::new();
    let mut pairs = 0;
    for species in grid_species() {
        let top = if matches!(species, Species::Vi(_)) { 3 } else { 4 };
        let c = category(&species, top);
        for b in 0..=top {
            for a in 0..=b {
                pairs += 1;
                let (closed, enumerated) = (species.hom_count(a, b), c.hom_size(a, b) as u128);
                if closed != enumerated {
                    problems.push(format!("{} hom({a}, {b}): closed form {closed}, enumerated {enumerated}", species.describe()));
                }
            }
        }
    }
    Line { pass: problems.is_empty(), text: format!("hom-count closed forms: {pairs} pairs a <= b <= 4 (VI <= 3){}", summary(&problems)) }
}

struct GlobalDim {
    category: Arc<FiniteCategory>,
}

impl FieldVisitor for GlobalDim {
    type Output = ProjectiveDimension;
    fn visit<F: Field>(self, f: F) -> ProjectiveDimension {
        global_dimension(self.category, f, 4).expect("gl.dim of C_0").computed
    }
}

fn base_case() -> Line {
    let mut problems = Vec::new();
    let mut count = 0;
    for species in grid_species() {
        for field in fields() {
            count += 1;
            let d = field.dispatch(GlobalDim { category: category(&species, 0) });
            if d != ProjectiveDimension::Exact(0) {
                problems.push(format!("{} {}: {d}", species.describe(), field.characteristic()));
            }
        }
    }
    Line { pass: problems.is_empty(), text: format!("base case gl.dim(kC_0) = 0: {count} cells{}", summary(&problems)) }
}

type Criterion = fn() -> Line;

fn main() {
    let criteria: [(&str, Criterion); 8] = [
        ("1", global_dimension_grid),
        ("2", semisimple_cells),
        ("3", oracle_equivalence),
        ("4", functor_suite),
        ("5", genetic_shift),
        ("6", radical_suite),
        ("7", hom_counts),
        ("8", base_case),
    ];
    let mut failed = 0;
    for (id, run) in criteria {
        let start = Instant::now();
        let line = run();
        if !line.pass {
            failed += 1;
        }
        println!("{} [{id}] {} ({:.1?})", if line.pass { "PASS" } else { "FAIL" }, line.text, start.elapsed());
    }
    println!("{} of 8 criteria pass", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
