//! Serialized report and certificate schemas. Field order is fixed by the
//! struct definitions and map keys are sorted, so identical inputs always
//! produce byte-identical JSON.

use serde::{Deserialize, Serialize};

use ctforge_core::orbit::{Check, CtCertificate};

pub const REPORT_SCHEMA: &str = "ctforge.report/1";
pub const CERTIFICATE_SCHEMA: &str = "ctforge.certificate/1";
pub const DIAGRAM_SCHEMA: &str = "ctforge.diagram/1";

#[derive(Serialize, Deserialize)]
pub struct Report<T> {
    pub schema: String,
    pub engine: String,
    pub command: String,
    pub inputs: serde_json::Value,
    pub results: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

#[derive(Serialize, Deserialize)]
pub struct DiagramJson {
    pub family: String,
    pub rank: usize,
}

#[derive(Serialize, Deserialize)]
pub struct CertificateJson {
    pub schema: String,
    pub diagram: DiagramJson,
    pub orientation: Vec<(usize, usize)>,
    pub d: i64,
    pub objects: Vec<(usize, i64)>,
    pub checks: Vec<CheckJson>,
    pub verdict: String,
}

#[derive(Serialize, Deserialize)]
pub struct CheckJson {
    pub kind: String,
    pub pair: Option<[(usize, i64); 2]>,
    pub degree: Option<i64>,
    pub value: Option<u64>,
}

pub fn certificate_json(cert: &CtCertificate) -> CertificateJson {
    let diagram = cert.quiver.diagram();
    CertificateJson {
        schema: CERTIFICATE_SCHEMA.to_string(),
        diagram: DiagramJson {
            family: diagram.family().to_string(),
            rank: diagram.rank(),
        },
        orientation: cert.quiver.arrows().to_vec(),
        d: cert.d,
        objects: cert.objects.iter().map(|o| (o.vertex, o.twist)).collect(),
        checks: cert.transcript.iter().map(check_json).collect(),
        verdict: if cert.verified { "verified" } else { "failed" }.to_string(),
    }
}

pub fn check_json(check: &Check) -> CheckJson {
    match check {
        Check::Rigidity {
            from,
            to,
            degree,
            value,
        } => CheckJson {
            kind: "rigidity".into(),
            pair: Some([(from.vertex, from.twist), (to.vertex, to.twist)]),
            degree: Some(*degree),
            value: Some(*value),
        },
        Check::MaximalityWitness {
            candidate,
            against,
            degree,
            value,
            outward,
        } => CheckJson {
            kind: if *outward {
                "maximality-witness-out".into()
            } else {
                "maximality-witness-in".into()
            },
            pair: Some([
                (candidate.vertex, candidate.twist),
                (against.vertex, against.twist),
            ]),
            degree: Some(*degree),
            value: Some(*value),
        },
        Check::PerpViolation { candidate, outward } => CheckJson {
            kind: if *outward {
                "perp-violation-out".into()
            } else {
                "perp-violation-in".into()
            },
            pair: Some([
                (candidate.vertex, candidate.twist),
                (candidate.vertex, candidate.twist),
            ]),
            degree: None,
            value: None,
        },
        Check::Periodicity { h: _, d, divides } => CheckJson {
            kind: "periodicity".into(),
            pair: None,
            degree: Some(*d),
            value: Some(u64::from(*divides)),
        },
        Check::NudClosure {
            object,
            image,
            inside,
        } => CheckJson {
            kind: "nud-closure".into(),
            pair: Some([(object.vertex, object.twist), (image.vertex, image.twist)]),
            degree: None,
            value: Some(u64::from(*inside)),
        },
    }
}
