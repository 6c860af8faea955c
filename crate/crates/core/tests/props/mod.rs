//! Property suites shared by the per-module test targets and the acceptance runner.

#![allow(dead_code)]

use proptest::test_runner::{Config, TestRunner};

pub mod lattice;
pub mod pairs;
pub mod poly;
pub mod toricpairs;
pub mod tvb;

pub const CASES: u32 = 256;

pub type Property = fn(&mut TestRunner) -> Result<(), String>;

pub fn runner() -> TestRunner {
    TestRunner::new(Config { cases: CASES, failure_persistence: None, ..Config::default() })
}

/// Run one property with a fresh runner, panicking with the shrunk counterexample on failure.
pub fn check(prop: Property) {
    if let Err(e) = prop(&mut runner()) {
        panic!("{e}");
    }
}

pub fn all() -> Vec<(&'static str, &'static [(&'static str, Property)])> {
    vec![
        ("fppoly", poly::PROPERTIES),
        ("lattice", lattice::PROPERTIES),
        ("pairs", pairs::PROPERTIES),
        ("toricpairs", toricpairs::PROPERTIES),
        ("tvb", tvb::PROPERTIES),
    ]
}
