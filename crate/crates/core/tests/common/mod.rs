#![allow(dead_code)]

use superch::poly::parse_spoly;
use superch::SPoly;

pub fn polys(src: &[&str], n: usize) -> Vec<SPoly> {
    src.iter().map(|s| parse_spoly(s, n).unwrap()).collect()
}

pub const ONE_ONE: &[&str] = &["S1^2", "-S1*S2", "1/4*(-S1^4+S2^2)"];

pub const TWO_ONE: &[&str] = &[
    "(S1^2-S2)^2",
    "-1/3*(S1^2-S2)*(S1^3+3*S1*S2-4*S3)",
    "-1/18*(S1^6-9*S1^4*S2+16*S1^3*S3-9*S1^2*S2^2+9*S2^3-8*S3^2)",
    "1/18*(S1^4-4*S1*S3+3*S2^2)*(S1^3-3*S1*S2+2*S3)",
];

pub const ONE_TWO: &[&str] = &[
    "(S1^2+S2)^2",
    "1/3*(S1^2+S2)*(S1^3-3*S1*S2-4*S3)",
    "-1/18*(S1^6+9*S1^4*S2+16*S1^3*S3-9*S1^2*S2^2-9*S2^3-8*S3^2)",
    "-1/18*(S1^4-4*S1*S3+3*S2^2)*(S1^3+3*S1*S2+2*S3)",
];

pub const THREE_ONE: &[&str] = &[
    "(S1^3-3*S1*S2+2*S3)^2",
    "-1/2*(S1^3-3*S1*S2+2*S3)*(S1^4-4*S1*S3-3*S2^2+6*S4)",
    "1/16*(S1^8+4*S1^6*S2-32*S1^5*S3-6*S1^4*(S2^2-6*S4)+64*S1^3*S2*S3-4*S1^2*(9*S2^3+18*S2*S4+8*S3^2)+96*S1*S2^2*S3+9*S2^4-32*S2*S3^2+36*S4^2-36*S2^2*S4)",
    "1/48*(S1^9-12*S1^7*S2+24*S1^6*S3+18*S1^5*(S2^2-2*S4)+24*S1^4*S2*S3-12*S1^3*(3*S2^3-6*S2*S4+8*S3^2)-72*S1^2*S3*(S2^2-2*S4)-8*S3*(9*S2^3-18*S2*S4+8*S3^2)+3*S1*(27*S2^4-36*S2^2*S4+32*S2*S3^2-36*S4^2))",
    "-1/96*(S1^4-6*S1^2*S2+3*S2^2+8*S1*S3-6*S4)*(S1^6-3*S1^4*S2+9*S1^2*S2^2+9*S2^3-24*S1*S2*S3-8*S1^3*S3+16*S3^2+18*S4*(S1^2-S2))",
];

pub const TWO_TWO: &[&str] = &[
    "(S1^4-4*S1*S3+3*S2^2)^2",
    "-2*(S1^4-4*S1*S3+3*S2^2)*(S1^3*S2-3*S1*S4+2*S2*S3)",
    "-1/12*S1^10+3/2*S1^6*S2^2+S1^4*(4*S3^2-9*S2*S4)-32/3*S1*S3^3+9/4*S1^2*(S2^4+4*S4^2)+3*S2^2*(4*S3^2-3*S2*S4)",
    "1/12*S1^9*S2-S1^7*S4+S1*(8*S3^2*S4-9/4*S2^5-9*S2*S4^2)+2*S1^6*S2*S3+2*S1^4*S3*S4+S1^3*S2*(3*S2*S4-8*S3^2)+6*S1^2*S2^3*S3-3/2*S1^5*S2^3+2/3*S2*S3*(9*S2*S4-8*S3^2)",
    "1/144*((S1^6+9*S1^2*S2^2-8*S1^3*S3+16*S3^2-18*S2*S4)^2-9*(S1^4*S2-3*S2^3+8*S1*S2*S3-6*S1^2*S4)^2)",
];

pub const OSP_TWO_TWO: &[&str] = &["S2^2", "0", "-S2*S4", "0", "1/16*(-S2^4+4*S4^2)"];

pub const OSP_TWO_FOUR: &[&str] = &[
    "(S2^2+2*S4)^2",
    "0",
    "1/6*(S2^2+2*S4)*(S2^3-6*S2*S4-16*S6)",
    "0",
    "-1/72*(S2^6+18*S2^4*S4-36*S2^2*S4^2+64*S2^3*S6-72*S4^3-128*S6^2)",
    "0",
    "-1/144*(S2^7+6*S2^5*S4+12*S2^3*S4^2+72*S2*S4^3-8*S2^4*S6-96*S2^2*S4*S6+96*S4^2*S6-128*S2*S6^2)",
];
