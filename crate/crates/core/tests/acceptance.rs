//! Acceptance criteria. Runs as a plain binary (`harness = false`) and prints
//! one PASS/FAIL line per criterion; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use sol_geom::curves::{curve_point, curve_tangent, translation_distance, BranchCase};
use sol_geom::verify::{
    planar_scan, random_curve_params, random_triangle, run_suite, table_spec, table_sweep,
    theorem_scan_with, trial_rng, SampleBox, Suite, SweepRow,
};
use sol_geom::{Execution, MetricTensor, SolPoint};

const SEED: u64 = 20_161_117;
const TABLE_TOL: f64 = 1e-4;

/// Rows of the reference tables: (label, ω₁, ω₂, ω₃, sum).
const TABLE_1: [(&str, f64, f64, f64, f64); 11] = [
    ("-10", 1.378505, 1.52957, 0.39949, 3.30757),
    ("-2", 1.37467, 1.45044, 0.41389, 3.23900),
    ("-1", 1.36841, 1.31743, 0.48434, 3.17018),
    ("1/100", 1.35376, 1.04468, 0.74818, 3.14661),
    ("1/10", 1.35196, 1.01850, 0.77962, 3.15008),
    ("1/2", 1.34369, 0.91985, 0.90711, 3.17066),
    ("3/4", 1.33931, 0.87828, 0.96332, 3.18092),
    ("3/2", 1.34516, 0.83131, 0.98842, 3.16489),
    ("2", 1.37178, 0.83021, 0.94235, 3.14433),
    ("5", 1.46886, 0.84547, 0.86833, 3.18265),
    ("10", 1.47522, 0.84678, 0.86665, 3.18866),
];

const TABLE_2: [(&str, f64, f64, f64, f64); 11] = [
    ("-10", 1.90559, 0.77539, 0.48862, 3.16960),
    ("-2", 1.99438, 0.39617, 0.86884, 3.25939),
    ("-1", 2.02152, 0.38864, 0.84198, 3.25214),
    ("1/100", 1.89224, 0.42533, 0.83598, 3.15355),
    ("1/10", 1.86415, 0.43075, 0.85319, 3.14808),
    ("1/2", 1.73149, 0.45855, 0.95244, 3.14248),
    ("3/4", 1.65752, 0.47867, 1.01153, 3.14772),
    ("3/2", 1.51011, 0.54873, 1.10619, 3.16502),
    ("2", 1.45565, 0.60090, 1.11440, 3.17095),
    ("5", 1.34369, 0.91985, 0.90711, 3.17066),
    ("10", 1.30564, 1.27407, 0.58095, 3.16067),
];

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn compare_table(
    rows: &[SweepRow],
    reference: &[(&str, f64, f64, f64, f64)],
) -> (f64, Vec<String>) {
    let mut worst: f64 = 0.0;
    let mut bad = Vec::new();
    for (row, &(label, w1, w2, w3, sum)) in rows.iter().zip(reference) {
        assert_eq!(row.label, label);
        let err = [
            row.omega1 - w1,
            row.omega2 - w2,
            row.omega3 - w3,
            row.angle_sum - sum,
        ]
        .iter()
        .fold(0.0f64, |m, d| m.max(d.abs()));
        worst = worst.max(err);
        if err.is_nan() || err > TABLE_TOL {
            bad.push(format!("{label}: {err:.2e}"));
        }
    }
    (worst, bad)
}

fn table_1() -> Outcome {
    let start = Instant::now();
    let rows = table_sweep(&table_spec(1).unwrap()).unwrap();
    let elapsed = start.elapsed();
    let (worst, bad) = compare_table(&rows, &TABLE_1);
    let ok = rows.len() == 11 && bad.is_empty() && elapsed < Duration::from_secs(1);
    outcome(
        ok,
        format!(
            "11 rows, max abs error {worst:.2e} (tol 1e-4), {elapsed:?} (limit 1 s){}",
            failures(&bad)
        ),
    )
}

fn table_2() -> Outcome {
    let rows = table_sweep(&table_spec(2).unwrap()).unwrap();
    let (worst, bad) = compare_table(&rows, &TABLE_2);
    let t1 = table_sweep(&table_spec(1).unwrap()).unwrap();
    let a = t1.iter().find(|r| r.label == "1/2").unwrap();
    let b = rows.iter().find(|r| r.label == "5").unwrap();
    let shared = a
        .omega()
        .iter()
        .zip(b.omega())
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    let ok = rows.len() == 11 && bad.is_empty() && shared <= 1e-12;
    outcome(ok, format!("11 rows, max abs error {worst:.2e} (tol 1e-4); shared row diff {shared:.1e} (tol 1e-12){}", failures(&bad)))
}

fn theorem() -> Outcome {
    let start = Instant::now();
    let r = theorem_scan_with(
        100_000,
        SEED,
        SampleBox::default(),
        1e-9,
        Execution::Sequential,
    );
    let elapsed = start.elapsed();
    let ok = r.violations == 0 && r.trials == 100_000 && elapsed < Duration::from_secs(30);
    outcome(
        ok,
        format!(
            "1e5 triangles in [-5,5]^3, violations {}, min sum {:.12}, max sum {:.6}, {elapsed:?} single-threaded (limit 30 s)",
            r.violations, r.min_angle_sum, r.max_angle_sum
        ),
    )
}

fn planarity() -> Outcome {
    let r = planar_scan(
        1_000,
        SEED,
        SampleBox::default(),
        1e-9,
        Execution::default(),
    );
    outcome(
        r.violations == 0,
        format!(
            "1e3 coordinate-plane triangles, max |sum - pi| {:.1e} (tol 1e-9), max residual {:.1e}, violations {}",
            r.max_abs_excess, r.max_coplanarity_residual, r.violations
        ),
    )
}

fn suite(s: Suite, tol: f64, what: &str) -> Outcome {
    let r = run_suite(s, 1_000, SEED, tol, Execution::default());
    outcome(
        r.passed() && r.tolerance == tol,
        format!(
            "{what}: worst {:.1e} (tol {:.0e}), violations {}{}",
            r.worst,
            r.tolerance,
            r.violations,
            r.witness
                .as_deref()
                .map(|w| format!(", first at {w}"))
                .unwrap_or_default()
        ),
    )
}

fn oracles() -> Outcome {
    let ode = suite(
        Suite::Ode,
        1e-8,
        "RK4 (1e4 steps, t <= 5) vs closed form, 1e3 directions",
    );
    let search = suite(
        Suite::Params,
        1e-8,
        "grid search vs closed-form inverse, 1e3 endpoints",
    );
    outcome(
        ode.ok && search.ok,
        format!("{}; {}", ode.detail, search.detail),
    )
}

fn unit_speed_and_distance() -> Outcome {
    let mut speed_err: f64 = 0.0;
    let mut sym_err: f64 = 0.0;
    let mut exact_err: f64 = 0.0;
    let cases = [
        BranchCase::Generic,
        BranchCase::Y0,
        BranchCase::Z0,
        BranchCase::Axis,
    ];
    for i in 0..1_000 {
        let mut rng = trial_rng(SEED, i);
        let p = random_curve_params(&mut rng, cases[i % 4], 10.0);
        for k in 0..=8 {
            let q = sol_geom::CurveParams {
                dir: p.dir,
                t: p.t * k as f64 / 8.0,
            };
            let g = MetricTensor::at(curve_point(&q));
            speed_err = speed_err.max((g.norm(&curve_tangent(&q)) - 1.0).abs());
        }

        let tri = random_triangle(&mut rng, SampleBox::default());
        let [a, b, _] = tri.vertices();
        let d_ab = translation_distance(a, b).unwrap();
        let d_ba = translation_distance(b, a).unwrap();
        sym_err = sym_err.max((d_ab - d_ba).abs());

        let [x, y, c] = [a.x, a.y, a.z];
        let vertical = translation_distance(SolPoint::ORIGIN, SolPoint::new(0.0, 0.0, c)).unwrap();
        let flat = translation_distance(SolPoint::ORIGIN, SolPoint::new(x, y, 0.0)).unwrap();
        exact_err = exact_err
            .max((vertical - c.abs()).abs())
            .max((flat - x.hypot(y)).abs());
    }
    let ok = speed_err <= 1e-12 && sym_err <= 1e-9 && exact_err <= 1e-12;
    outcome(
        ok,
        format!(
            "|speed - 1| {speed_err:.1e} (tol 1e-12); |d(P,Q) - d(Q,P)| {sym_err:.1e} (tol 1e-9); axis/base-plane error {exact_err:.1e} (tol 1e-12)"
        ),
    )
}

fn failures(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!(", failing rows: {}", bad.join("; "))
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("table-1 reproduction", table_1),
        ("table-2 reproduction", table_2),
        ("angle-sum theorem scan", theorem),
        ("coordinate-plane lemma", planarity),
        ("antipodality", || {
            suite(Suite::Antipodality, 1e-9, "1e3 random triangles")
        }),
        ("round trip", || {
            suite(
                Suite::Roundtrip,
                1e-9,
                "1e3 curve parameters over all four cases",
            )
        }),
        ("oracle equivalence", oracles),
        ("unit speed and distance", unit_speed_and_distance),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let r = check();
        println!(
            "[{}] {name}: {}",
            if r.ok { "PASS" } else { "FAIL" },
            r.detail
        );
        failed += usize::from(!r.ok);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
