//! End-to-end classification of a graph into the span-girth typology of
//! acquaintance networks: coteries, social circles and hamlets, crossed
//! with cliquish versus cliqueless, plus the star and clique special cases.

use crate::detect::{self, MooreStatus, StructureWitnesses};
use crate::error::Error;
use crate::graph::{Dist, Graph, Vertex};
use crate::span;

/// Top-level family of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Complete graph (diameter at most 1); outside the typology.
    Clique,
    /// A star: the only acyclic graphs of diameter two.
    Star,
    /// Diameter 2, span 2, not a star.
    Coterie,
    /// Diameter 2, span 3: covered by a pair of central neighbors.
    SocialCircle,
    /// Diameter 2, span 4: no spanning star, no central pair.
    Hamlet,
    /// Disconnected or diameter at least 3.
    NotAcquaintance,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Clique => "clique",
            Family::Star => "star",
            Family::Coterie => "coterie",
            Family::SocialCircle => "social_circle",
            Family::Hamlet => "hamlet",
            Family::NotAcquaintance => "not_acquaintance",
        }
    }
}

/// Girth-derived texture of an acquaintance network.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cliquishness {
    /// Girth 3: contains a triangle.
    Cliquish,
    /// Girth 4 or 5: triangle-free.
    Cliqueless,
    /// Acyclic; among diameter-2 graphs this means a star.
    Acyclic,
    /// Outside the typology.
    NotApplicable,
}

impl Cliquishness {
    pub fn as_str(self) -> &'static str {
        match self {
            Cliquishness::Cliquish => "cliquish",
            Cliquishness::Cliqueless => "cliqueless",
            Cliquishness::Acyclic => "acyclic",
            Cliquishness::NotApplicable => "n/a",
        }
    }
}

/// Full classification record for one graph.
///
/// Metric fields are always filled. The typology fields (`span`, `cell`,
/// `sst_edges`) are present exactly for connected graphs of diameter at
/// most two; `separable` and `cutpoints` require connectivity.
#[derive(Clone, Debug)]
pub struct TypologyReport {
    pub n: usize,
    pub m: usize,
    pub diameter: Dist,
    pub radius: Dist,
    pub family: Family,
    pub separable: Option<bool>,
    pub cutpoints: Option<Vec<Vertex>>,
    pub span: Option<u32>,
    pub girth: Dist,
    /// Span-girth cell `(t, g)`, assigned to cyclic diameter-2 graphs.
    pub cell: Option<(u32, u32)>,
    pub cliquishness: Cliquishness,
    pub witnesses: StructureWitnesses,
    /// Edges of the witness smallest spanning tree, when one was built.
    pub sst_edges: Vec<(Vertex, Vertex)>,
    /// Some vertex has a cliqueless neighborhood.
    pub local_cliquelessness: bool,
    pub moore: bool,
    /// Runtime self-check observations, normally empty.
    pub notes: Vec<String>,
}

/// Classifies any graph; never fails. Disconnected graphs and graphs of
/// diameter three or more come back as `NotAcquaintance` with the metric
/// fields still filled.
pub fn classify(g: &Graph) -> TypologyReport {
    let profile = g.metric_profile();
    let witnesses = detect::structure_witnesses(g);
    let girth = span::girth(g).girth;
    let local_cliquelessness = !witnesses.cliqueless_neighborhood_points.is_empty();
    let moore = witnesses.moore;
    let connected = g.is_connected();
    let mut notes = Vec::new();

    let (separable, cutpoints) = if connected {
        let cuts = g.cutpoints().expect("connected");
        (Some(!cuts.is_empty()), Some(cuts))
    } else {
        (None, None)
    };

    if girth == Dist::Finite(5) && profile.diameter == Dist::Finite(2) {
        if !g.is_regular() {
            notes.push(
                "irregular graph of diameter 2 and girth 5 contradicts Singleton's \
                 irregular Moore graph theorem"
                    .to_string(),
            );
        } else if g.n() == 3250 {
            notes.push("Moore graph of order 3250: existence undecided".to_string());
        }
    }

    let mut report = TypologyReport {
        n: g.n(),
        m: g.m(),
        diameter: profile.diameter,
        radius: profile.radius,
        family: Family::NotAcquaintance,
        separable,
        cutpoints,
        span: None,
        girth,
        cell: None,
        cliquishness: Cliquishness::NotApplicable,
        witnesses,
        sst_edges: Vec::new(),
        local_cliquelessness,
        moore,
        notes,
    };

    if !connected {
        return report;
    }

    match profile.diameter {
        Dist::Finite(d) if d <= 1 => {
            report.family = Family::Clique;
            let n = g.n();
            report.span = Some(match n {
                0 | 1 => 0,
                2 => 1,
                _ => 2,
            });
            if n >= 2 {
                let hub = Vertex(0);
                report.sst_edges = g.vertices().skip(1).map(|v| (hub, v)).collect();
            }
            if girth == Dist::Finite(3) {
                report.cliquishness = Cliquishness::Cliquish;
            }
        }
        Dist::Finite(2) => {
            let span_result = span::span_2club(g).expect("diameter checked");
            report.span = Some(span_result.span);
            report.sst_edges = span_result.witness.graph().edge_pairs();
            let is_star = g.m() == g.n() - 1;
            if is_star {
                report.family = Family::Star;
                report.cliquishness = Cliquishness::Acyclic;
            } else {
                report.family = match span_result.span {
                    2 => Family::Coterie,
                    3 => Family::SocialCircle,
                    _ => Family::Hamlet,
                };
                let girth_value = girth.finite().expect("cyclic: connected, not a tree");
                report.cell = Some((span_result.span, girth_value));
                report.cliquishness = if girth_value == 3 {
                    Cliquishness::Cliquish
                } else {
                    Cliquishness::Cliqueless
                };
            }
        }
        _ => {}
    }

    report
}

/// Number of span-girth subclasses available to graphs of diameter `d`:
/// spans run from d to 2d and a span-t graph has girths 3 through t+1.
pub fn subclass_count(d: u32) -> Result<u64, Error> {
    if d == 0 {
        return Err(Error::ZeroDiameterClass);
    }
    let d = d as u64;
    Ok((d + 1) * (3 * d - 2) / 2)
}

/// The structural certificate separating the three span classes of a
/// diameter-2 graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpanCertificate {
    /// Span 2: a vertex adjacent to all others.
    SpanningStar { center: Vertex },
    /// Span 3: an adjacent pair covering every vertex.
    CentralPair { pair: (Vertex, Vertex) },
    /// Span 4: every adjacent pair leaves some vertex uncovered.
    AllPairsLeaveRemainder,
}

/// Produces the certificate for a diameter-2 graph; agrees with
/// [`span::span_2club`] by construction of the closed form.
pub fn span_certificate(g: &Graph) -> Result<SpanCertificate, Error> {
    if g.metric_profile().diameter != Dist::Finite(2) {
        return Err(Error::NotDiameterTwo);
    }
    if let Some(&center) = detect::spanning_star_centers(g).first() {
        return Ok(SpanCertificate::SpanningStar { center });
    }
    if let Some(&pair) = detect::central_neighbor_pairs(g).first() {
        return Ok(SpanCertificate::CentralPair { pair });
    }
    Ok(SpanCertificate::AllPairsLeaveRemainder)
}

/// Moore status carried through to reports.
pub fn moore_status(g: &Graph) -> MooreStatus {
    detect::moore_status(g)
}
