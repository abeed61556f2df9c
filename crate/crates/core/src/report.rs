//! Run configuration and the machine-readable code report shared by the CLI,
//! the examples and the reproduction suite.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::codes::{min_distance, CyclicCode, DistanceBudget, LcdMethod, Provenance, Witness};
use crate::constructions::Construction;
use crate::cyclotomic::FieldRegistry;
use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

/// A pinned defining polynomial for GF(p^e), coefficients low to high.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModulusOverride {
    pub p: u64,
    pub e: u32,
    pub coeffs: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub exhaustive_cap: u128,
    pub witness_support_max: usize,
    pub output: OutputFormat,
    /// Worker threads for distance searches; `None` uses every core.
    pub threads: Option<usize>,
    pub field_modulus_overrides: Vec<ModulusOverride>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let budget = DistanceBudget::default();
        RunConfig {
            exhaustive_cap: budget.exhaustive_cap,
            witness_support_max: budget.witness_support_max,
            output: OutputFormat::Json,
            threads: None,
            field_modulus_overrides: Vec::new(),
        }
    }
}

impl RunConfig {
    /// The two moduli the published generator polynomials are written under.
    pub fn paper_moduli() -> Vec<ModulusOverride> {
        vec![
            ModulusOverride { p: 2, e: 5, coeffs: vec![1, 0, 1, 0, 0, 1] },
            ModulusOverride { p: 2, e: 6, coeffs: vec![1, 1, 0, 1, 1, 0, 1] },
        ]
    }

    /// Registry carrying the overrides; each is checked for irreducibility and
    /// degree `e` here.
    pub fn registry(&self) -> Result<FieldRegistry> {
        let mut reg = FieldRegistry::new();
        for o in &self.field_modulus_overrides {
            if o.coeffs.len() != o.e as usize + 1 {
                return Err(Error::InvalidParameter(format!(
                    "modulus for GF({}^{}) needs {} coefficients",
                    o.p,
                    o.e,
                    o.e + 1
                )));
            }
            reg = reg.with_override(o.p, &o.coeffs)?;
        }
        Ok(reg)
    }

    pub fn budget(&self) -> Result<DistanceBudget> {
        if self.exhaustive_cap == 0 || self.witness_support_max == 0 {
            return Err(Error::InvalidParameter("caps must be positive".into()));
        }
        Ok(DistanceBudget {
            exhaustive_cap: self.exhaustive_cap,
            witness_support_max: self.witness_support_max,
            ..DistanceBudget::default()
        })
    }

    /// Runs `f` inside a pool of `threads` workers, or on the global pool.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.threads {
            None => Ok(f()),
            Some(0) => Err(Error::InvalidParameter("threads must be positive".into())),
            Some(t) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .map_err(|e| Error::InvalidParameter(e.to_string()))?;
                Ok(pool.install(f))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub n: usize,
    pub q: u64,
    pub k: usize,
    /// 0 for the zero code, which has no minimum distance.
    pub d_lower: u64,
    pub d_lower_provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_exact: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub lcd: bool,
    pub reversible: bool,
    /// Bose distance; absent for g = 1.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bose: Option<u64>,
    /// Generator coefficients, constant term first, as base-field element codes.
    pub generator: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicted_k: Option<usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, i64>,
}

impl CodeReport {
    pub fn params_triple(&self) -> String {
        match self.d_exact {
            Some(d) => format!("[{},{},{}]", self.n, self.k, d),
            None => format!("[{},{},>={}]", self.n, self.k, self.d_lower),
        }
    }

    pub fn csv_row(&self, verdict: &str) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.label.as_deref().unwrap_or(""),
            self.n,
            self.q,
            self.k,
            self.d_lower,
            self.d_exact.map(|d| d.to_string()).unwrap_or_default(),
            self.lcd,
            self.reversible,
            verdict
        )
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        if let Some(l) = &self.label {
            let _ = write!(s, "{l} ");
        }
        let _ = write!(
            s,
            "{} over GF({}) lcd={} reversible={} d_lower={} ({:?})",
            self.params_triple(),
            self.q,
            self.lcd,
            self.reversible,
            self.d_lower,
            self.d_lower_provenance
        );
        if let Some(b) = self.bose {
            let _ = write!(s, " bose={b}");
        }
        if let Some(w) = &self.witness {
            let _ = write!(s, " witness_weight={}", w.weight);
        }
        s
    }
}

pub const CSV_HEADER: &str = "label,n,q,k,d_lower,d_exact,lcd,reversible,verdict";

/// Full report for a code; `bound` is a proven lower bound from a construction.
pub fn analyze_code(
    code: &CyclicCode,
    label: Option<String>,
    bound: Option<(u64, String)>,
    cfg: &RunConfig,
    reg: &FieldRegistry,
) -> Result<CodeReport> {
    let sf = reg.splitting(code.n() as u64, code.q())?;
    let lcd = code.is_lcd(LcdMethod::HullRank, None)?;
    if lcd != code.is_lcd(LcdMethod::SelfReciprocal, None)? {
        return Err(Error::Inconsistent("LCD tests disagree".into()));
    }
    let reversible = code.is_reversible();
    let bose = match code.generator().degree() {
        Some(0) => None,
        _ => Some(code.bose_distance(&sf)?),
    };
    let generator = code.generator().to_codes().into_iter().map(|c| c as u64).collect();
    let mut report = CodeReport {
        label,
        n: code.n(),
        q: code.q(),
        k: code.k(),
        d_lower: 0,
        d_lower_provenance: Provenance::Trivial,
        d_exact: None,
        witness: None,
        lcd,
        reversible,
        bose,
        generator,
        predicted_k: None,
        params: BTreeMap::new(),
    };
    if code.k() > 0 {
        let mut budget = cfg.budget()?;
        budget.theorem_bound = bound;
        let d = cfg.install(|| min_distance(code, Some(&sf), &budget))??;
        report.d_lower = d.d_lower;
        report.d_lower_provenance = d.provenance;
        report.d_exact = d.d_exact;
        report.witness = d.witness;
    }
    Ok(report)
}

/// Report for a generator given as text, e.g. `x^4+x+1` or `(x+1)*(x^2+x+1)`.
pub fn analyze(n: usize, q: u64, generator: &str, cfg: &RunConfig, reg: &FieldRegistry) -> Result<CodeReport> {
    let f = reg.base(q)?;
    let g = Poly::parse(&f, generator)?;
    let code = CyclicCode::from_generator(n, g)?;
    analyze_code(&code, None, None, cfg, reg)
}

/// Report for a construction, carrying its label, bound and prediction.
pub fn analyze_construction(c: &Construction, cfg: &RunConfig, reg: &FieldRegistry) -> Result<CodeReport> {
    let bound = c.bound.as_ref().map(|b| (b.d, b.source.clone()));
    let mut r = analyze_code(&c.code, Some(c.label.clone()), bound, cfg, reg)?;
    r.predicted_k = c.predicted_k;
    r.params = c.params.clone();
    Ok(r)
}
