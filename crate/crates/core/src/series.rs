//! Summation engine.
#[derive(Clone, Debug)]
pub struct SeriesJob;
#[derive(Clone, Debug)]
pub struct SumResult;
#[derive(Clone, Copy, Debug)]
pub enum Method { Direct, Blocks, Accelerated }
#[derive(Clone, Debug)]
pub enum TermExpr {}
