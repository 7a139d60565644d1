//! Serializable views of core results. Every number derived from an interval
//! is reported with its enclosure and width.

use serde::Serialize;

use prep_atlas_core::arith::{rational_to_f64, Round};
use prep_atlas_core::cantor::{BoundaryFunction, BoundaryTag, CantorLevel, LocalizationReport};
use prep_atlas_core::capacity::{CriterionReport, FeketeConfiguration};
use prep_atlas_core::classify::{ClassificationResult, RejectionReason};
use prep_atlas_core::mandelset::{ComplexRootSet, DiscReport};
use prep_atlas_core::orbit::{AlgebraicDecision, EscapeKind, OrbitRecord, Verdict};
use prep_atlas_core::{DyadicInterval, IntPolynomial, Rational, RealAlgebraic};

const REPORT_BITS: u32 = 64;

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct Enclosure {
    pub lo: f64,
    pub hi: f64,
    pub width: f64,
}

impl Enclosure {
    pub fn of(x: &DyadicInterval) -> Self {
        let (lo, hi) = x.to_f64_bounds();
        let width = x.width().to_f64(Round::Up);
        Enclosure { lo, hi, width }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct RealView {
    pub approx: f64,
    /// Exact value when rational.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    pub minpoly: String,
    pub enclosure: Enclosure,
}

impl RealView {
    pub fn of(x: &RealAlgebraic) -> Self {
        let x = &x.refined_bits(REPORT_BITS);
        RealView {
            approx: x.to_f64(),
            exact: x.as_rational().map(|q| q.to_string()),
            minpoly: x.minpoly().to_string(),
            enclosure: Enclosure::of(&x.enclosure(REPORT_BITS)),
        }
    }

    /// `-3.4142135623730949 [+-1.1e-16]`.
    pub fn short(&self) -> String {
        match &self.exact {
            Some(q) => q.clone(),
            None => format!("{:.16} [w={:.1e}]", self.approx, self.enclosure.width),
        }
    }
}

pub fn poly(p: &IntPolynomial) -> String {
    p.to_string()
}

#[derive(Serialize, Debug, Clone, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerdictView {
    Preperiodic { m: usize, n: usize },
    Escaped { step: usize, witness: String, embedding: Option<usize>, modulus_lower: Option<f64> },
    BudgetExhausted,
}

impl VerdictView {
    pub fn of(v: &Verdict) -> Self {
        match v {
            Verdict::Preperiodic { m, n } => VerdictView::Preperiodic { m: *m, n: *n },
            Verdict::Escaped { step, kind: EscapeKind::Archimedean { embedding, modulus_lower } } => VerdictView::Escaped {
                step: *step,
                witness: "archimedean".into(),
                embedding: Some(*embedding),
                modulus_lower: Some(*modulus_lower),
            },
            Verdict::Escaped { step, kind: EscapeKind::Denominator } => {
                VerdictView::Escaped { step: *step, witness: "denominator".into(), embedding: None, modulus_lower: None }
            }
            Verdict::BudgetExhausted => VerdictView::BudgetExhausted,
        }
    }

    pub fn short(&self) -> String {
        match self {
            VerdictView::Preperiodic { m, n } => format!("preperiodic (m, n) = ({m}, {n})"),
            VerdictView::Escaped { step, witness, .. } => format!("escapes at step {step} ({witness})"),
            VerdictView::BudgetExhausted => "undecided within budget".into(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct RationalDecisionView {
    pub alpha: String,
    pub c: String,
    pub verdict: VerdictView,
    pub orbit: Vec<String>,
}

impl RationalDecisionView {
    pub fn of(alpha: &Rational, c: &Rational, rec: &OrbitRecord) -> Self {
        RationalDecisionView {
            alpha: alpha.to_string(),
            c: c.to_string(),
            verdict: VerdictView::of(&rec.verdict),
            orbit: rec.values.iter().map(|v| v.to_string()).collect(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct RootDecisionView {
    pub root: RealView,
    pub factor: String,
    pub verdict: VerdictView,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct AlgebraicDecisionView {
    pub alpha: String,
    pub polynomial: String,
    pub factors: Vec<String>,
    pub roots: Vec<RootDecisionView>,
}

impl AlgebraicDecisionView {
    pub fn of(d: &AlgebraicDecision) -> Self {
        AlgebraicDecisionView {
            alpha: d.alpha.to_string(),
            polynomial: poly(&d.minpoly),
            factors: d.factors.iter().map(|f| poly(&f.factor)).collect(),
            roots: d
                .roots
                .iter()
                .map(|r| RootDecisionView {
                    root: RealView::of(&r.root),
                    factor: poly(&d.factors[r.factor_index].factor),
                    verdict: VerdictView::of(&r.verdict),
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct ComplexRootView {
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
    /// Certified upper bound on `|F_{m,n}|` at the reported double.
    pub residual: f64,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct RootSetView {
    pub alpha: String,
    pub m: u32,
    pub n: u32,
    pub squarefree_degree: usize,
    pub real_count: usize,
    pub escape_radius: f64,
    pub max_modulus: f64,
    pub roots: Vec<ComplexRootView>,
}

impl RootSetView {
    pub fn of(set: &ComplexRootSet, disc: &DiscReport) -> Self {
        RootSetView {
            alpha: set.alpha.to_string(),
            m: set.m,
            n: set.n,
            squarefree_degree: set.squarefree.deg(),
            real_count: set.real_count(),
            escape_radius: disc.radius,
            max_modulus: disc.max_modulus,
            roots: set
                .roots
                .iter()
                .map(|r| ComplexRootView { re: r.value.re, im: r.value.im, modulus: r.value.norm(), residual: r.residual })
                .collect(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct TagView {
    pub step: u32,
    pub sign: i8,
    pub function: &'static str,
}

impl TagView {
    fn of(t: &BoundaryTag) -> Self {
        let function = match t.function {
            BoundaryFunction::U => "u",
            BoundaryFunction::V => "v",
            BoundaryFunction::Synthetic => "clip",
        };
        TagView { step: t.step, sign: t.sign, function }
    }

    pub fn short(&self) -> String {
        if self.function == "clip" {
            return "clip".into();
        }
        let s = if self.sign > 0 { "+" } else { "-" };
        format!("f^{}={}{}", self.step, s, self.function)
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct CantorIntervalView {
    pub left: RealView,
    pub right: RealView,
    pub left_tag: TagView,
    pub right_tag: TagView,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<usize>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct CantorView {
    pub alpha: String,
    pub depth: u32,
    pub eps: String,
    pub synthetic: bool,
    pub intervals: Vec<CantorIntervalView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub localization: Option<LocalizationView>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct LocalizationView {
    pub m: u32,
    pub n: u32,
    pub degree: usize,
    pub real_roots: usize,
    pub outside: usize,
}

impl CantorView {
    pub fn of(level: &CantorLevel, loc: Option<&LocalizationReport>) -> Self {
        let intervals = level
            .intervals
            .intervals()
            .iter()
            .zip(&level.boundary_tags)
            .enumerate()
            .map(|(i, (iv, (lt, rt)))| CantorIntervalView {
                left: RealView::of(&iv.left),
                right: RealView::of(&iv.right),
                left_tag: TagView::of(lt),
                right_tag: TagView::of(rt),
                roots: loc.map(|l| l.per_interval[i]),
            })
            .collect();
        CantorView {
            alpha: level.alpha.to_string(),
            depth: level.depth,
            eps: level.eps.to_string(),
            synthetic: level.is_synthetic(),
            intervals,
            localization: loc.map(|l| LocalizationView {
                m: l.m,
                n: l.n,
                degree: l.degree,
                real_roots: l.real_roots,
                outside: l.outside,
            }),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct CriterionRowView {
    pub n: u32,
    pub a_n: Enclosure,
    pub b_n: String,
    pub b_n_approx: f64,
    pub a_below_b: bool,
    pub ratio_below: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct CriterionView {
    pub interval: (RealView, RealView),
    pub n0: Option<u32>,
    pub certified: bool,
    pub table: Vec<CriterionRowView>,
}

impl CriterionView {
    pub fn of(r: &CriterionReport) -> Self {
        CriterionView {
            interval: (RealView::of(&r.interval.0), RealView::of(&r.interval.1)),
            n0: r.n0,
            certified: r.certified,
            table: r
                .table
                .iter()
                .map(|row| CriterionRowView {
                    n: row.n,
                    a_n: Enclosure::of(&row.a_n),
                    b_n: row.b_n.to_string(),
                    b_n_approx: rational_to_f64(&row.b_n),
                    a_below_b: row.a_below_b,
                    ratio_below: row.ratio_below,
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct WitnessView {
    pub root: RealView,
    pub m: u32,
    pub n: u32,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct ParameterView {
    pub minpoly: String,
    pub roots: Vec<RealView>,
    pub m: u32,
    pub n: u32,
    pub cross_checked: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct AcceptedView {
    pub polynomial: String,
    pub witnesses: Vec<WitnessView>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct RejectedView {
    pub polynomial: String,
    pub reason: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub escaping_root: Option<RealView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub escape_step: Option<usize>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct ClassificationView {
    pub alpha: String,
    pub interval: (RealView, RealView),
    pub degree_bound: u32,
    pub kronecker_shift: String,
    pub parameters: Vec<ParameterView>,
    pub accepted_roots: Vec<RealView>,
    pub candidates_considered: Vec<String>,
    pub accepted: Vec<AcceptedView>,
    pub rejected: Vec<RejectedView>,
    pub notes: Vec<String>,
}

impl ClassificationView {
    pub fn of(r: &ClassificationResult) -> Self {
        ClassificationView {
            alpha: r.alpha.to_string(),
            interval: (RealView::of(&r.interval.0), RealView::of(&r.interval.1)),
            degree_bound: r.degree_bound,
            kronecker_shift: r.kronecker_shift.to_string(),
            parameters: r
                .parameters
                .iter()
                .map(|p| ParameterView {
                    minpoly: poly(&p.minpoly),
                    roots: p.roots.iter().map(RealView::of).collect(),
                    m: p.m,
                    n: p.n,
                    cross_checked: p.cross_checked,
                })
                .collect(),
            accepted_roots: r.accepted_roots().iter().map(RealView::of).collect(),
            candidates_considered: r.candidates_considered.iter().map(poly).collect(),
            accepted: r
                .accepted
                .iter()
                .map(|a| AcceptedView {
                    polynomial: poly(&a.poly),
                    witnesses: a.witnesses.iter().map(|w| WitnessView { root: RealView::of(&w.root), m: w.m, n: w.n }).collect(),
                })
                .collect(),
            rejected: r
                .rejected
                .iter()
                .map(|x| match &x.reason {
                    RejectionReason::OutsideInterval => RejectedView {
                        polynomial: poly(&x.poly),
                        reason: "roots outside interval",
                        escaping_root: None,
                        escape_step: None,
                    },
                    RejectionReason::Escapes { root, step } => RejectedView {
                        polynomial: poly(&x.poly),
                        reason: "some root escapes",
                        escaping_root: Some(RealView::of(root)),
                        escape_step: Some(*step),
                    },
                })
                .collect(),
            notes: r.notes.clone(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct FeketeView {
    pub n: usize,
    pub points: Vec<(f64, f64)>,
    pub objective: f64,
    pub diameter_estimate: f64,
    pub iterations: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_diameter: Option<Enclosure>,
}

impl FeketeView {
    pub fn of(conf: &FeketeConfiguration, exact: Option<&DyadicInterval>) -> Self {
        FeketeView {
            n: conf.points.len(),
            points: conf.points.iter().map(|z| (z.re, z.im)).collect(),
            objective: conf.objective,
            diameter_estimate: conf.diameter(),
            iterations: conf.iterations,
            exact_diameter: exact.map(Enclosure::of),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Default)]
pub struct CapacityView {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<(RealView, RealView)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval_capacity: Option<RealView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    /// `(n, enclosure of R_alpha^(1/2^(n-1)))`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub lemniscate: Vec<(u32, Enclosure)>,
    /// `(n, enclosure of d_n)`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub n_diameters: Vec<(u32, Enclosure)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fekete: Option<FeketeView>,
}
