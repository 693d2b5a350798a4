//! Command-line definitions.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use oklab_core::Rat;

use crate::format::parse_rat;
use crate::report::Format;

/// A comma separated list such as `2,3` or `1/2,3`.
#[derive(Clone, Debug, PartialEq)]
pub struct List<T>(pub Vec<T>);

impl<T: FromStr> FromStr for List<T>
where
    T::Err: std::fmt::Display,
{
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(|t| t.trim().parse::<T>().map_err(|e| format!("{t:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()
            .map(List)
    }
}

/// A comma separated list of rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct Point(pub Vec<Rat>);

impl FromStr for Point {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(|t| parse_rat(t).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()
            .map(Point)
    }
}

#[derive(Debug, Parser)]
#[command(name = "oklab", version, about = "Newton-Okounkov bodies, volume functions and mixed multiplicities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for commands that evaluate several degrees.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Closure check bound for staircase inputs.
    #[arg(long, global = true, default_value_t = 8)]
    pub bound: u64,
}

#[derive(Clone, Debug, Args)]
pub struct Source {
    /// Input document: a file path or inline JSON.
    #[arg(long, conflicts_with = "example")]
    pub input: Option<String>,
    /// Built-in algebra: nonpoly, min, concave-pl, segre or golden.
    #[arg(long)]
    pub example: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Fiber,
    Count,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions of graded pieces.
    Hilbert {
        #[command(flatten)]
        source: Source,
        /// Degree vector; repeat for several degrees.
        #[arg(long, required = true)]
        n: Vec<List<u64>>,
        /// List dim [A]_(k n) for k = 0..=nmax along a single degree.
        #[arg(long)]
        nmax: Option<u64>,
        /// Also print the Hilbert polynomial.
        #[arg(long)]
        polynomial: bool,
    },
    /// Values of the volume function.
    VolumeFn {
        #[command(flatten)]
        source: Source,
        /// Point of the degree cone; repeat for several points.
        #[arg(long, required = true)]
        x: Vec<Point>,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        /// Largest multiple used by the counting estimate.
        #[arg(long, default_value_t = 500)]
        nmax: u64,
    },
    /// Newton-Okounkov body of a Veronese subalgebra, or the global cone.
    NoBody {
        #[command(flatten)]
        source: Source,
        /// Veronese direction (optional when s = 1).
        #[arg(long)]
        n: Option<List<u64>>,
        /// Print the rays of the global cone instead.
        #[arg(long)]
        global: bool,
    },
    /// Fiber of the global body over a degree point.
    Fiber {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        x: Point,
    },
    /// Mixed multiplicity with its Fujita ladder.
    MixedMult {
        #[command(flatten)]
        source: Source,
        /// Multidegree type d.
        #[arg(long = "type")]
        d: List<u32>,
        #[arg(long, default_value = "1,2,4,8,16")]
        pschedule: List<u64>,
    },
    /// Subset criterion for positivity of a mixed multiplicity.
    Positivity {
        #[command(flatten)]
        source: Source,
        #[arg(long = "type")]
        d: List<u32>,
    },
    /// Mixed multiplicities of graded families of monomial ideals.
    IdealFamily {
        /// The family I as a family or ideal document (default: powers of the maximal ideal).
        #[arg(long)]
        input: Option<String>,
        /// Family or ideal documents J_1, ..., J_s.
        #[arg(long, required = true, value_delimiter = ',')]
        families: Vec<String>,
        /// Type d0,d1,...,ds.
        #[arg(long = "type")]
        d: List<u32>,
        #[arg(long, default_value = "1,2,4,8,16")]
        pschedule: List<u64>,
        /// Also fit the limit along n0,n1,...,ns up to nmax.
        #[arg(long)]
        limit: Option<List<u64>>,
        #[arg(long, default_value_t = 500)]
        nmax: u64,
    },
    /// Mixed volume of lattice polytopes computed from both sides.
    MixedVolume {
        /// Polytope documents.
        #[arg(long, required = true, value_delimiter = ',')]
        bodies: Vec<String>,
        #[arg(long = "type")]
        d: List<u32>,
        #[arg(long, default_value = "1,2,4,8,16")]
        pschedule: List<u64>,
    },
    /// Reproduce a built-in example and compare with its known value.
    VerifyExample {
        /// nonpoly, min, concave-pl, segre or golden.
        name: String,
        #[arg(long)]
        n: Option<List<u64>>,
        #[arg(long, default_value_t = 500)]
        nmax: u64,
        #[arg(long = "type")]
        d: Option<List<u32>>,
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definitions_are_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn lists_parse() {
        assert_eq!("2, 3".parse::<List<u64>>().unwrap(), List(vec![2, 3]));
        assert!("2,x".parse::<List<u64>>().is_err());
        let p: Point = "1/2,3".parse().unwrap();
        assert_eq!(p.0[0], Rat::new(1.into(), 2.into()));
    }
}
