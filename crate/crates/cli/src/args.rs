use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "purepoly",
    version,
    about = "Pure, Dumas and Eisenstein polynomials, their iterates, and factorization over Q and F_p"
)]
pub struct Cli {
    /// Emit JSON instead of flattened text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for randomized splitting over F_p.
    #[arg(long, global = true, default_value_t = purepoly::ff::DEFAULT_SEED)]
    pub seed: u64,

    /// Degree cap for exact iteration and factorization.
    #[arg(long, global = true)]
    pub max_degree: Option<u64>,

    /// Coefficient-size cap (bits) for exact iteration.
    #[arg(long, global = true)]
    pub max_bits: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct PrimeArg {
    #[arg(long)]
    pub prime: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Mode {
    Type,
    Pure,
    Dumas,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Membership in the p-type, pure, Dumas and Eisenstein classes, or in a named set.
    Classify {
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        /// A set such as E(5), D(2,3) or S(2,{2,3}); replaces --prime.
        #[arg(long)]
        set: Option<String>,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Newton polygon with respect to a prime.
    Newton {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// The n-th iterate, exactly or modulo a prime.
    Iterate {
        #[arg(long)]
        n: u32,
        /// Reduce modulo this prime, by the closed form when the shape allows.
        #[arg(long)]
        prime: Option<u64>,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Eventual p-type, purity or Dumas property of the iterates.
    Eventual {
        #[arg(long, value_enum)]
        mode: Mode,
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(long)]
        r: Option<u64>,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Bounds on the number and degrees of irreducible factors of iterates.
    Bound {
        /// Degree; taken from the polynomial when one is given.
        #[arg(long)]
        degree: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        /// Detect r as the purity exponent at this prime.
        #[arg(long)]
        prime: Option<u64>,
        /// Tabulate n = 1..=max-n.
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(allow_hyphen_values = true)]
        poly: Option<String>,
    },
    /// Irreducibility certificate by Eisenstein, Dumas, reduction mod p or Schönemann.
    Certify {
        /// Candidate primes; replaces the automatic choice.
        #[arg(long)]
        prime: Vec<u64>,
        /// Base polynomial for the Schönemann criterion.
        #[arg(long)]
        base: Vec<String>,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Factorization over Q.
    Factor {
        /// Factor the n-th iterate instead.
        #[arg(long)]
        iterate: Option<u32>,
        /// Check a claimed factorization instead of computing one.
        #[arg(long)]
        verify: Vec<String>,
        /// Candidate primes for certificates in --verify mode.
        #[arg(long)]
        prime: Vec<u64>,
        /// Report the least n <= max-n with f^n reducible.
        #[arg(long)]
        newly_reducible: bool,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Computations over F_p.
    Ff {
        #[command(subcommand)]
        op: FfOp,
    },
    /// Schönemann's criterion for a polynomial expanded in powers of a base.
    Schonemann {
        #[arg(long)]
        base: String,
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Stability certificates.
    Stability {
        #[command(subcommand)]
        op: StabilityOp,
    },
    /// Run the worked-example corpus.
    Corpus {
        /// Run only cases whose id contains this text.
        #[arg(long)]
        filter: Option<String>,
        /// Directory of corpus files.
        #[arg(long)]
        dir: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct FfInput {
    #[command(flatten)]
    pub prime: PrimeArg,
    /// Use the n-th iterate, composed over F_p.
    #[arg(long)]
    pub iterate: Option<u32>,
    #[arg(allow_hyphen_values = true)]
    pub poly: String,
}

#[derive(Debug, Subcommand)]
pub enum FfOp {
    /// Factorization into monic irreducibles.
    Factor(FfInput),
    /// Rabin irreducibility test.
    Irreducible(FfInput),
    /// Quadratic stability via the critical orbit.
    Jones {
        #[command(flatten)]
        input: FfInput,
        #[arg(long, default_value_t = 1000)]
        max_orbit: usize,
    },
    /// Least n with the n-th iterate reducible.
    NewlyReducible {
        #[command(flatten)]
        input: FfInput,
        #[arg(long, default_value_t = 8)]
        max_n: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum StabilityOp {
    /// Dynamic irreducibility of a p^r-Dumas polynomial.
    Dumas {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(long)]
        r: u64,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Eventual stability of a p^r-pure polynomial.
    Pure {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(long)]
        r: u64,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// f-stability of the iterates of a Dumas polynomial g.
    FStable {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(long)]
        r: u64,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Purity of f∘g for a p^r-pure f, without expansion.
    Composition {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(long)]
        r: u64,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Eventually stable set from a family given as POLY:R.
    Set {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(required = true, allow_hyphen_values = true)]
        members: Vec<String>,
    },
    /// Eventual stability of x^d + c.
    Binomial {
        #[arg(long)]
        degree: usize,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Period of 0 under f.
    Orbit {
        #[arg(long, default_value_t = 64)]
        max_n: u32,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
}
