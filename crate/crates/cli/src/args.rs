use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "jackideal",
    version,
    about = "Exact Jack polynomials and the admissible-partition ideal"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Worker threads for parallel verification (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: Option<u32>,

    /// Directory where computed Jack polynomials are stored and reused.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate partitions up to a degree, or check one for admissibility.
    Partitions(PartitionsArgs),
    /// Compute a Jack polynomial, symbolic in β or at a rational β.
    Jack(JackArgs),
    /// Ideal basis and membership.
    #[command(subcommand)]
    Ideal(IdealCommand),
    /// Number of admissible partitions in each degree 0..=dmax.
    Character(KrnArgs),
    /// The value of P_λ at x_1 = ⋯ = x_n = 1.
    SpecializePrincipal(PrincipalArgs),
    /// Run a verification suite; exits 1 if any case fails.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Args, Debug, Clone)]
pub struct KrnArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub dmax: u32,
}

#[derive(Args, Debug)]
pub struct PartitionsArgs {
    /// Number of parts allowed.
    #[arg(long)]
    pub n: usize,
    /// Largest degree to enumerate.
    #[arg(long, conflicts_with = "lambda")]
    pub dmax: Option<u32>,
    /// A partition to check, as comma-separated parts.
    #[arg(long)]
    pub lambda: Option<String>,
    /// Restrict to (or check against) (k,r)-admissibility; needs --r.
    #[arg(long, requires = "r")]
    pub k: Option<u32>,
    #[arg(long, requires = "k")]
    pub r: Option<u32>,
}

#[derive(Args, Debug)]
pub struct JackArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub n: usize,
    /// Coefficients in ℚ(β) (the default when no β is given).
    #[arg(long, conflicts_with_all = ["beta", "k"])]
    pub symbolic: bool,
    /// Specialize at this rational β, written p/q.
    #[arg(long, conflicts_with = "k", allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// Specialize at β = −(r−1)/(k+1); needs --r.
    #[arg(long, requires = "r")]
    pub k: Option<u32>,
    #[arg(long, requires = "k")]
    pub r: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum IdealCommand {
    /// The specialized Jack basis of each degree up to dmax.
    Basis(KrnArgs),
    /// Decide membership of a polynomial read from --input or stdin.
    /// Exits 1 when the polynomial is not a member.
    Member(MemberArgs),
}

#[derive(Args, Debug)]
pub struct MemberArgs {
    #[command(flatten)]
    pub params: KrnArgs,
    /// File with the polynomial as monomial-symmetric JSON; stdin if absent.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PrincipalArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, conflicts_with = "k", allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, requires = "r")]
    pub k: Option<u32>,
    #[arg(long, requires = "k")]
    pub r: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Operator identities on seeded random polynomials.
    Commutators {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Degree of the random test polynomials.
        #[arg(long, default_value_t = 4)]
        dmax: u32,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        tmax: u32,
        #[arg(long, default_value_t = 2)]
        mmax: i64,
    },
    /// Pieri coefficients: symbolic identity, or vanishing at β(k,r).
    Pieri(SuiteArgs),
    /// l_{±1} coefficients: symbolic identity, or vanishing at β(k,r).
    Lassalle(SuiteArgs),
    /// Images of basis elements under p_m, l_m and w^(t)_m stay in the ideal.
    Closure {
        #[command(flatten)]
        params: KrnArgs,
        #[arg(long, default_value_t = 2)]
        mmax: i64,
        #[arg(long, default_value_t = 3)]
        tmax: u32,
    },
    /// Restricting x_n to 0 after j derivatives lands in the ideal in n−1 variables.
    Restriction {
        #[command(flatten)]
        params: KrnArgs,
        #[arg(long, default_value_t = 2)]
        jmax: u32,
    },
    /// No poles at β(k,r) for admissible partitions and their neighbours.
    Regularity(KrnArgs),
    /// At r = 2 the ideal is the space vanishing on k+1 coinciding variables.
    Wheel {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dmax: u32,
    },
    /// Eigen-equations of P_(r,0,0) at β(2,r).
    Phi3 {
        #[arg(long)]
        r: u32,
    },
    /// Hamiltonian and Sekiguchi eigen-equations in 1..=n variables.
    Sekiguchi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dmax: u32,
    },
}

#[derive(Args, Debug)]
pub struct SuiteArgs {
    /// Check the identity over ℚ(β) in 1..=n variables.
    #[arg(long, conflicts_with_all = ["k", "r"])]
    pub symbolic: bool,
    #[arg(long, required_unless_present = "symbolic")]
    pub k: Option<u32>,
    #[arg(long, required_unless_present = "symbolic")]
    pub r: Option<u32>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub dmax: u32,
}
