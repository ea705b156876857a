use clap::{Args, Parser, Subcommand, ValueEnum};
use sol_geom::verify::Suite;
use sol_geom::SolPoint;

#[derive(Debug, Parser)]
#[command(
    name = "solgeom",
    version,
    about = "Translation curves and triangle angle sums in Sol geometry"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Check tolerance for the angle-sum bound and flat-sum tests. Negative
    /// values tighten the bound.
    #[arg(
        long,
        global = true,
        allow_negative_numbers = true,
        default_value_t = 1e-9
    )]
    pub tol: f64,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Display angles in degrees instead of radians.
    #[arg(long, global = true)]
    pub degrees: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Interior angles and diagnostics of the triangle A1 A2 A3 (each "x,y,z").
    Triangle {
        #[arg(allow_hyphen_values = true, value_parser = parse_point)]
        a1: SolPoint,
        #[arg(allow_hyphen_values = true, value_parser = parse_point)]
        a2: SolPoint,
        #[arg(allow_hyphen_values = true, value_parser = parse_point)]
        a3: SolPoint,
    },
    /// Reproduce one of the two reference angle tables (1 or 2).
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
    /// Sample a translation curve from the origin.
    #[command(allow_negative_numbers = true)]
    Curve {
        #[arg(value_parser = parse_real)]
        phi: f64,
        #[arg(value_parser = parse_real)]
        theta: f64,
        #[arg(value_parser = parse_real)]
        t: f64,
        /// Number of sample points (at least 2).
        #[arg(short, long, default_value_t = 50)]
        n: usize,
    },
    /// Curve parameters (phi, theta, t) reaching the point (x, y, z).
    #[command(allow_negative_numbers = true)]
    Params {
        #[arg(value_parser = parse_real)]
        x: f64,
        #[arg(value_parser = parse_real)]
        y: f64,
        #[arg(value_parser = parse_real)]
        z: f64,
    },
    /// Translation distance between two points (each "x,y,z").
    Distance {
        #[arg(allow_hyphen_values = true, value_parser = parse_point)]
        p: SolPoint,
        #[arg(allow_hyphen_values = true, value_parser = parse_point)]
        q: SolPoint,
    },
    /// Angles along a one-parameter family of triangles.
    Sweep {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_point, default_value = "0,0,0")]
        a1: SolPoint,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_point)]
        a2: SolPoint,
        /// Third vertex with exactly one free coordinate marked "_", e.g. "0.5,5,_".
        #[arg(long, allow_hyphen_values = true)]
        a3: String,
        /// Comma-separated values for the free coordinate; fractions like 1/2 allowed.
        #[arg(long, allow_hyphen_values = true)]
        values: String,
    },
    /// Run randomized property suites.
    Verify {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Suite to run, or "all".
        #[arg(long, default_value = "all", value_parser = parse_suites)]
        suite: SuiteSelection,
    },
}

#[derive(Debug, Clone)]
pub struct SuiteSelection(pub Vec<Suite>);

fn parse_suites(s: &str) -> Result<SuiteSelection, String> {
    if s == "all" {
        return Ok(SuiteSelection(Suite::ALL.to_vec()));
    }
    s.split(',')
        .map(|x| x.trim().parse::<Suite>())
        .collect::<Result<_, _>>()
        .map(SuiteSelection)
}

/// A finite real, optionally written as a fraction `p/q`.
pub fn parse_real(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let v = match s.split_once('/') {
        Some((n, d)) => {
            let n: f64 = n
                .trim()
                .parse()
                .map_err(|_| format!("'{s}' is not a number"))?;
            let d: f64 = d
                .trim()
                .parse()
                .map_err(|_| format!("'{s}' is not a number"))?;
            n / d
        }
        None => s.parse().map_err(|_| format!("'{s}' is not a number"))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("'{s}' is not finite"))
    }
}

pub fn parse_point(s: &str) -> Result<SolPoint, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("'{s}' is not a coordinate triple x,y,z"));
    }
    let c = parts
        .iter()
        .map(|p| parse_real(p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SolPoint::new(c[0], c[1], c[2]))
}
