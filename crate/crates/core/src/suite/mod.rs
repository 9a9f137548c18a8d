//! Verification tasks and campaigns built on the core algorithms.

mod campaign;
mod certs;
mod checks;
mod identities;
mod report;
pub mod theorems;

pub use certs::{StoredCertificate, STORED_CERTIFICATES};
pub use identities::{lookup, verify_corrupted, verify_sum_product, Identity, ProductSide, SumSide, CATALOG};
pub use report::{Standing, Status, VerificationReport};
pub use campaign::{run_campaign, Campaign, CampaignOptions};
pub use checks::{
    check_certificate, check_stored, empty_certificate_control, fuzz_relation, numeric_residual, repaired_certificates,
    search_all, search_report, verify_relations, FUZZ_RANGE,
};
