//! Process-wide tally of emitted certificates and their re-verification.
//!
//! Every producer of a [`RadicalCert`](crate::RadicalCert), a linear
//! combination ([`BezoutCert`](crate::BezoutCert) style) or an
//! [`AnnPowerWitness`](crate::AnnPowerWitness) re-checks it by exact
//! arithmetic before handing it out and records the outcome here.

use std::sync::atomic::{AtomicU64, Ordering};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertKind {
    Radical,
    Combination,
    AnnPower,
}

const KINDS: usize = 3;

static EMITTED: [AtomicU64; KINDS] = [const { AtomicU64::new(0) }; KINDS];
static VERIFIED: [AtomicU64; KINDS] = [const { AtomicU64::new(0) }; KINDS];

fn slot(kind: CertKind) -> usize {
    match kind {
        CertKind::Radical => 0,
        CertKind::Combination => 1,
        CertKind::AnnPower => 2,
    }
}

/// Records one emitted certificate; returns `ok` for chaining.
pub fn record(kind: CertKind, ok: bool) -> bool {
    EMITTED[slot(kind)].fetch_add(1, Ordering::Relaxed);
    if ok {
        VERIFIED[slot(kind)].fetch_add(1, Ordering::Relaxed);
    }
    ok
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AuditSnapshot {
    pub emitted: [u64; KINDS],
    pub verified: [u64; KINDS],
}

impl AuditSnapshot {
    pub fn total_emitted(&self) -> u64 {
        self.emitted.iter().sum()
    }

    pub fn total_verified(&self) -> u64 {
        self.verified.iter().sum()
    }

    pub fn emitted_of(&self, kind: CertKind) -> u64 {
        self.emitted[slot(kind)]
    }

    pub fn all_verified(&self) -> bool {
        self.emitted == self.verified
    }
}

pub fn snapshot() -> AuditSnapshot {
    let mut s = AuditSnapshot::default();
    for i in 0..KINDS {
        s.emitted[i] = EMITTED[i].load(Ordering::Relaxed);
        s.verified[i] = VERIFIED[i].load(Ordering::Relaxed);
    }
    s
}
