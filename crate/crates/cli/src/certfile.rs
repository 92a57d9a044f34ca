//! JSON form of [`CoveringCertificate`].

use dartboard_core::covers::{ConvexRegion, CoveringCertificate, Verification};
use dartboard_core::Point;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RegionJson {
    Hexagon { width: f64 },
    Square { side: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VerifiedJson {
    Certified { grid_h: f64 },
    Failed { failed: [f64; 2] },
    Status(Status),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Unverified,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub region: RegionJson,
    pub radius: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nominal_radius: Option<f64>,
    pub centers: Vec<[f64; 2]>,
    pub provenance: String,
    #[serde(default = "unverified")]
    pub verified: VerifiedJson,
}

fn unverified() -> VerifiedJson {
    VerifiedJson::Status(Status::Unverified)
}

impl From<&CoveringCertificate> for CertificateJson {
    fn from(cert: &CoveringCertificate) -> Self {
        let region = match cert.region {
            ConvexRegion::Hexagon { width } => RegionJson::Hexagon { width },
            ConvexRegion::Square { side } => RegionJson::Square { side },
        };
        let verified = match cert.verified {
            Verification::Unverified => unverified(),
            Verification::Certified { grid_h } => VerifiedJson::Certified { grid_h },
            Verification::Failed { witness } => VerifiedJson::Failed {
                failed: [witness.x, witness.y],
            },
        };
        Self {
            region,
            radius: cert.radius,
            nominal_radius: cert.nominal_radius,
            centers: cert.centers.iter().map(|c| [c.x, c.y]).collect(),
            provenance: cert.provenance.clone(),
            verified,
        }
    }
}

impl TryFrom<CertificateJson> for CoveringCertificate {
    type Error = dartboard_core::Error;

    /// The stored verification status is not trusted: an imported
    /// certificate starts out unverified.
    fn try_from(json: CertificateJson) -> Result<Self, Self::Error> {
        let region = match json.region {
            RegionJson::Hexagon { width } => ConvexRegion::Hexagon { width },
            RegionJson::Square { side } => ConvexRegion::Square { side },
        };
        let centers = json
            .centers
            .iter()
            .map(|&[x, y]| Point::new(x, y))
            .collect();
        let cert = CoveringCertificate::new(region, json.radius, centers, json.provenance)?;
        Ok(match json.nominal_radius {
            Some(nominal) => cert.with_nominal(nominal),
            None => cert,
        })
    }
}
