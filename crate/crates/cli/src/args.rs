use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_SEED: u64 = 0x5eed;

/// Exact invariants of isolated hypersurface singularities.
///
/// Polynomial arguments are inline expressions or `@path` to read one from a file.
#[derive(Debug, Parser)]
#[command(name = "zmult", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Comma-separated variable names; inferred from the inputs when omitted.
    #[arg(long, global = true, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiplicity (order) and initial form of a germ.
    Mult { poly: String },

    /// Milnor number of a germ at the origin or at a critical point.
    Milnor {
        poly: String,
        /// Also run the truncated linear-algebra oracle.
        #[arg(long)]
        oracle: bool,
        /// Degree horizon for the oracle; defaults to 2*mu + 4.
        #[arg(long)]
        dmax: Option<u32>,
        /// List the monomial basis of the Jacobian quotient.
        #[arg(long)]
        staircase: bool,
        /// Critical point, comma-separated coordinates.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        at: Option<Vec<String>>,
    },

    /// Lefschetz numbers, s-sequence and zeta function of the monodromy.
    Zeta {
        #[command(flatten)]
        source: ResolutionSource,
        /// Number of variables for --resolution.
        #[arg(long)]
        n: Option<usize>,
        /// Horizon for the Lefschetz numbers.
        #[arg(long = "K", short = 'K')]
        horizon: Option<u32>,
    },

    /// Characteristic polynomial of the monodromy.
    Charpoly {
        #[command(flatten)]
        source: ResolutionSource,
        /// Number of variables for --resolution.
        #[arg(long)]
        n: Option<usize>,
    },

    /// Necessary conditions for topological equisingularity of two germs.
    Discriminate { f: String, g: String },

    /// Milnor number profile of a one-parameter family.
    Family {
        #[command(flatten)]
        family: FamilySource,
        /// Comma-separated rational parameter samples.
        #[arg(long = "t", value_delimiter = ',')]
        samples: Option<Vec<String>>,
        /// Report orders along this line direction (comma-separated).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "transverse")]
        line: Option<Vec<String>>,
        /// Search for a line transverse to every sampled tangent cone.
        #[arg(long)]
        transverse: bool,
        /// Candidate budget for the transverse-line search.
        #[arg(long, default_value_t = 500)]
        trials: usize,
        /// Random candidates appended to the alpha ladder.
        #[arg(long, default_value_t = 32)]
        candidates: usize,
    },

    /// Multiplicity and Milnor number of a vector field.
    Foliation {
        /// Components of the field, one per variable.
        components: Vec<String>,
        /// Use the Hamiltonian field of a plane germ.
        #[arg(long, conflicts_with_all = ["components", "gradient"])]
        hamiltonian: Option<String>,
        /// Use the gradient field of a germ.
        #[arg(long, conflicts_with_all = ["components", "hamiltonian"])]
        gradient: Option<String>,
    },

    /// Cross-check the engine against the oracle on the bundled corpus.
    Corpus {
        /// Degree horizon for the oracle; defaults to 2*mu + 4 per entry.
        #[arg(long)]
        dmax: Option<u32>,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Only run entries with these names.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ResolutionSource {
    /// Homogeneous germ z_1^l + ... + z_n^l, given as `l=3,n=2`.
    #[arg(long)]
    pub fermat: Option<String>,
    /// Plane curve x^a + y^b, given as `a,b`.
    #[arg(long)]
    pub brieskorn: Option<String>,
    /// Resolution data: JSON array of {"m": .., "chi": ..}; needs --n.
    #[arg(long, requires = "n")]
    pub resolution: Option<String>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct FamilySource {
    /// Rescaling family joining a germ to its initial form.
    #[arg(long)]
    pub rescaling: Option<String>,
    /// Family spec: {"pieces": [{"poly": .., "tpower": ..}], "vars": [..]}.
    #[arg(long)]
    pub spec: Option<String>,
    /// Search alpha such that (1-t)(z_1^k+...+z_n^k) + t*alpha*P stays isolated.
    #[arg(long)]
    pub alpha: Option<String>,
}
