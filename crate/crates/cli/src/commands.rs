use serde_json::{json, Value};
use sol_geom::curves::{
    curve_point, sample_curve, solve_endpoint, translation_distance, CurveParams,
};
use sol_geom::triangles::{report, Triangle};
use sol_geom::verify::{run_suite, table_spec, table_sweep, Axis, SweepRow, SweepSpec, SweepValue};
use sol_geom::{translation_to, Execution, SolError, SolPoint};

use crate::args::{parse_real, Command, GlobalOpts};
use crate::output::{num, Envelope, Table};

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_DEGENERATE: u8 = 2;
pub const EXIT_VIOLATION: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<SolError> for CliError {
    fn from(e: SolError) -> Self {
        let code = match e {
            SolError::DegenerateTriangle(..) | SolError::Origin => EXIT_DEGENERATE,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// What a command produced. `violation` carries the message for exit code 3.
pub struct Outcome {
    pub envelope: Envelope,
    pub table: Table,
    pub violation: Option<String>,
}

fn point_json(p: SolPoint) -> Value {
    json!([p.x, p.y, p.z])
}

struct Units(bool);

impl Units {
    fn angle(&self, x: f64) -> f64 {
        if self.0 {
            x.to_degrees()
        } else {
            x
        }
    }

    fn convert(&self, v: &mut Value, keys: &[&str]) {
        if !self.0 {
            return;
        }
        for k in keys {
            if let Some(x) = v.get_mut(*k) {
                if let Some(f) = x.as_f64() {
                    *x = json!(f.to_degrees());
                }
            }
        }
    }
}

pub fn run(cmd: &Command, opts: &GlobalOpts) -> Result<Outcome, CliError> {
    let units = Units(opts.degrees);
    match cmd {
        Command::Triangle { a1, a2, a3 } => {
            let tri = Triangle::new(*a1, *a2, *a3)?;
            let r = report(&tri)?;
            let mut results = serde_json::to_value(&r).expect("report serializes");
            units.convert(
                &mut results,
                &["omega1", "omega2", "omega3", "angle_sum", "excess"],
            );
            for side in ["d12", "d13", "d23"] {
                units.convert(&mut results["sides"][side], &["phi", "theta"]);
            }
            results["bound_holds"] = json!(r.satisfies_bound(opts.tol));
            let input =
                json!({"a1": point_json(*a1), "a2": point_json(*a2), "a3": point_json(*a3)});
            let table = Table::flattened(&results);
            Ok(Outcome {
                envelope: Envelope::new("triangle", opts, input, results),
                table,
                violation: None,
            })
        }
        Command::Tables { which } => {
            let spec = table_spec(*which)?;
            let rows = table_sweep(&spec)?;
            Ok(sweep_outcome(
                "tables",
                opts,
                json!({"table": which}),
                &spec,
                &rows,
                &units,
            ))
        }
        Command::Sweep { a1, a2, a3, values } => {
            let spec = sweep_spec(*a1, *a2, a3, values)?;
            let rows = table_sweep(&spec)?;
            let input = json!({
                "a1": point_json(*a1),
                "a2": point_json(*a2),
                "a3": a3,
                "values": spec.values.iter().map(|v| v.label.clone()).collect::<Vec<_>>(),
            });
            Ok(sweep_outcome("sweep", opts, input, &spec, &rows, &units))
        }
        Command::Curve { phi, theta, t, n } => {
            let params = CurveParams::new(*phi, *theta, *t)?;
            let pts = sample_curve(&params, *n)?;
            let last = (*n - 1) as f64;
            let mut table = Table::new(&["index", "t", "x", "y", "z"]);
            let mut points = Vec::with_capacity(pts.len());
            for (k, p) in pts.iter().enumerate() {
                let tk = if k + 1 == *n { *t } else { t * k as f64 / last };
                table
                    .rows
                    .push(vec![k.to_string(), num(tk), num(p.x), num(p.y), num(p.z)]);
                points.push(json!({"t": tk, "x": p.x, "y": p.y, "z": p.z}));
            }
            let end = curve_point(&params);
            let input =
                json!({"phi": units.angle(*phi), "theta": units.angle(*theta), "t": t, "n": n});
            let results = json!({"endpoint": point_json(end), "points": points});
            Ok(Outcome {
                envelope: Envelope::new("curve", opts, input, results),
                table,
                violation: None,
            })
        }
        Command::Params { x, y, z } => {
            let p = SolPoint::new(*x, *y, *z);
            let s = solve_endpoint(p)?;
            let back = curve_point(&s.params);
            let results = json!({
                "phi": units.angle(s.params.dir.phi),
                "theta": units.angle(s.params.dir.theta),
                "t": s.params.t,
                "case": s.case.name(),
                "distance": s.params.t,
                "residual": back.max_abs_diff(&p),
            });
            let input = json!({"point": point_json(p)});
            let table = Table::flattened(&results);
            Ok(Outcome {
                envelope: Envelope::new("params", opts, input, results),
                table,
                violation: None,
            })
        }
        Command::Distance { p, q } => {
            let d = translation_distance(*p, *q)?;
            let image = translation_to(*p).inverse()?.apply(*q)?;
            let mut results = json!({"distance": d, "image": point_json(image)});
            if let Ok(s) = solve_endpoint(image) {
                results["phi"] = json!(units.angle(s.params.dir.phi));
                results["theta"] = json!(units.angle(s.params.dir.theta));
                results["case"] = json!(s.case.name());
            }
            let input = json!({"p": point_json(*p), "q": point_json(*q)});
            let table = Table::flattened(&results);
            Ok(Outcome {
                envelope: Envelope::new("distance", opts, input, results),
                table,
                violation: None,
            })
        }
        Command::Verify { trials, suite } => {
            if *trials == 0 {
                return Err(CliError::usage("--trials must be at least 1"));
            }
            let results: Vec<_> = suite
                .0
                .iter()
                .map(|&s| run_suite(s, *trials, opts.seed, opts.tol, Execution::default()))
                .collect();
            let violations: usize = results.iter().map(|r| r.violations).sum();
            let mut table = Table::new(&[
                "suite",
                "trials",
                "seed",
                "tolerance",
                "violations",
                "worst",
                "witness",
            ]);
            for r in &results {
                table.rows.push(vec![
                    r.suite.name().to_string(),
                    r.trials.to_string(),
                    r.seed.to_string(),
                    num(r.tolerance),
                    r.violations.to_string(),
                    num(r.worst),
                    r.witness.clone().unwrap_or_default(),
                ]);
            }
            let violation = (violations > 0).then(|| {
                results
                    .iter()
                    .filter(|r| !r.passed())
                    .map(|r| {
                        format!(
                            "{}: {} violations, first at {}",
                            r.suite,
                            r.violations,
                            r.witness.as_deref().unwrap_or("?")
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            let input = json!({
                "trials": trials,
                "seed": opts.seed,
                "suites": suite.0.iter().map(|s| s.name()).collect::<Vec<_>>(),
            });
            let results = json!({"violations": violations, "suites": results});
            Ok(Outcome {
                envelope: Envelope::new("verify", opts, input, results),
                table,
                violation,
            })
        }
    }
}

fn sweep_spec(a1: SolPoint, a2: SolPoint, a3: &str, values: &str) -> Result<SweepSpec, CliError> {
    let parts: Vec<&str> = a3.split(',').map(str::trim).collect();
    if parts.len() != 3 || parts.iter().filter(|p| **p == "_").count() != 1 {
        return Err(CliError::usage(format!(
            "--a3 '{a3}' needs three coordinates with exactly one '_'"
        )));
    }
    let mut template = [0.0; 3];
    let mut free = Axis::X;
    for (k, part) in parts.iter().enumerate() {
        if *part == "_" {
            free = [Axis::X, Axis::Y, Axis::Z][k];
        } else {
            template[k] = parse_real(part).map_err(CliError::usage)?;
        }
    }
    let values = values
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_real(s).map(|v| SweepValue::new(s, v)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::usage)?;
    let spec = SweepSpec {
        a1,
        a2,
        a3_template: SolPoint::from_array(template),
        free,
        values,
    };
    spec.validate()?;
    Ok(spec)
}

fn sweep_outcome(
    command: &'static str,
    opts: &GlobalOpts,
    input: Value,
    spec: &SweepSpec,
    rows: &[SweepRow],
    units: &Units,
) -> Outcome {
    let mut table = Table::new(&["value", "omega1", "omega2", "omega3", "sum"]);
    let mut json_rows = Vec::with_capacity(rows.len());
    for r in rows {
        let w = r.omega().map(|x| units.angle(x));
        let sum = units.angle(r.angle_sum);
        table.rows.push(vec![
            r.label.clone(),
            num(w[0]),
            num(w[1]),
            num(w[2]),
            num(sum),
        ]);
        json_rows.push(json!({
            "label": r.label,
            "value": r.value,
            "a3": point_json(spec.vertex(r.value)),
            "omega1": w[0],
            "omega2": w[1],
            "omega3": w[2],
            "angle_sum": sum,
            "error": r.error,
        }));
    }
    let results = json!({"free": spec.free, "rows": json_rows});
    Outcome {
        envelope: Envelope::new(command, opts, input, results),
        table,
        violation: None,
    }
}
