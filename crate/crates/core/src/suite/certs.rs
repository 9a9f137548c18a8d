use crate::cylindric::Profile;
use crate::error::Result;
use crate::symbolic::Certificate;

/// A stored linear combination proving the recursion for `profile`.
#[derive(Clone, Copy, Debug)]
pub struct StoredCertificate {
    pub modulus: u32,
    pub profile: [u32; 3],
    pub text: &'static str,
}

impl StoredCertificate {
    pub fn profile(&self) -> Profile {
        Profile::new(self.profile)
    }

    pub fn certificate(&self) -> Result<Certificate> {
        Certificate::parse(self.text, self.modulus)
    }

    pub fn tag(&self) -> String {
        format!("cert-m{}-{}", self.modulus, self.profile())
    }
}

const fn cert(modulus: u32, profile: [u32; 3], text: &'static str) -> StoredCertificate {
    StoredCertificate {
        modulus,
        profile,
        text,
    }
}

pub const STORED_CERTIFICATES: &[StoredCertificate] = &[
    cert(6, [1, 1, 1], "(2*z*q - 3)*R1(0) + z*q*R2(0) + 2*(1 - z*q)*R3(0)"),
    cert(6, [2, 1, 0], "R1(-1) - R3(-1)"),
    cert(7, [2, 1, 1], "-R1(0) + z*q*R2(1) - R3(0)"),
    cert(7, [2, 2, 0], "R3(-1)"),
    cert(8, [4, 1, 0], "R1(1, 0, 1, 1)"),
    cert(8, [3, 0, 2], "R4(1, 0, 0) - R3(1, 0, 0)"),
    cert(
        8,
        [3, 2, 0],
        "-(1 - z*q)*(R4(2, 0, 0) - R3(2, 0, 0)) - R4(1, 1, 0)
         - R1(0, 1, 1, 0) - R4(0, 1, 0) + R3(0, 0, 1) + R2(1, 1, 0, 1)",
    ),
    cert(
        8,
        [3, 1, 1],
        "-R1(0, 1, 0, 1) + (1 - z*q)*(R1(1, 1, 1, 1) - R4(2, 0, 0) + R3(2, 0, 0))
         - z*q*R2(2, 1, -1, 1)",
    ),
    cert(
        8,
        [2, 2, 1],
        "q*R3(-1, 0, 2) - q*R3(-1, 1, 2) - q*R4(-1, 2, 0) + q*R4(-1, 2, 1)
         - z*q*R3(2, 0, 0) + z*q^2*R3(3, 1, 0)
         + z*q*R4(2, 0, 0) - q*R1(-1, 1, 2, 1) - q^2*R1(-1, 2, 2, 1) + q*R1(0, 1, 2, 1)
         - q*R1(1, 2, 1, 1)
         + q*R1(1, 2, 2, 1) - q*R2(0, 1, 0, 2) + q*R2(1, 1, 0, 2) + z*q*R2(2, 2, 0, 1)
         - R1(0, 1, 1, 0)
         - R1(0, 1, 1, 1) + R1(0, 1, 2, 0) + R1(0, 2, 1, 1) - R1(0, 2, 2, 0) - R2(0, 1, 0, 1)
         + R2(0, 1, 1, 1) - R2(0, 2, 1, 1) + R2(1, 0, 0, 1) + R2(1, 1, 0, 1)
         + (q^2*z - q)*R4(1, 2, 1)
         - z*q*R2(2, 1, 0, 1) + (q*z - 2)*R2(2, 0, 0, 1) + (q*z - 1)*R3(1, 1, 1)
         + (-q^3*z^2 + q^2*z + q*z - 1)*R3(3, 0, 0)
         + (-q*z + 1)*R4(2, 0, 1) + (q^3*z^2 - q^2*z - q*z + 1)*R4(3, 0, 0)
         + (-q*z + 2)*R1(1, 1, 1, 0)
         + (q^2*z - q)*R2(3, 1, 0, 2) + (-q^2*z + q)*R2(2, 1, 0, 2) - R4(0, 0, 1) + R4(1, 2, 0)",
    ),
    cert(10, [6, 1, 0], "-R1(0, 1, 1, 1)"),
    cert(
        10,
        [5, 1, 1],
        "q*R1(-1, 1, 2, 1) + R1(0, 1, 1, 0) - (1 - q*z)*R1(1, 1, 1, 1)
         + R2(0, 1, 0, 1) - R2(1, 0, 0, 1)",
    ),
    cert(
        10,
        [4, 1, 2],
        "-z*q*R1(0, 2, 0, 1) + z*q^2*R1(0, 2, 1, 1) + z*q^3*R1(-1, 2, 2, 2) - z*q^2*R1(0, 2, 0, 2)
         - z*q^2*R1(2, 2, 0, 0) + z*q^2*R1(-1, 2, 2, 1) - z*q*R1(2, 1, 0, 0) + z*q*R1(0, 2, 1, 0)
         + q^4*z^2*R1(3, 2, -1, 0) + z*q^3*R1(0, 1, 2, 2) + z*q^2*R1(0, 1, 2, 1)
         - z*q^2*R1(1, 2, 0, 2) - R1(0, 1, 0, 0) + R1(1, 1, 0, 1)
         + (-q^2*z^2 - q^2*z)*R2(2, 2, -1, 1) + (-q^3*z^2 + q^2*z)*R2(2, 2, -1, 2)
         + (-q^3*z^2 + q^2*z)*R2(3, 1, -1, 1)
         - z*q^2*R2(1, 0, 1, 2) - z*q*R2(2, 1, -1, 1) - q^4*z^2*R2(3, 1, -1, 2)
         + z*q^2*R2(0, 2, 0, 2) + z*q*R2(0, 2, 0, 1) + q^3*z^2*R2(3, 0, -1, 1)
         - z*q*R3(2, 1, 0, 0) + z*q*R3(1, 1, 1, 0) - z*q*R3(2, 1, -1, 0)
         + z*q*R4(1, 0, 0, 1) - q^3*z^2*R4(3, 0, -1, 1) + z*q*R4(2, 0, 0, 1)",
    ),
];
