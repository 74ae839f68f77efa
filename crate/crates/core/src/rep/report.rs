//! Aggregate per-complex report. (filled in after config_space)
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {}
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DEntry {}
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperBound {}
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RepVerdict { Unknown }
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RepCertificate { None }

pub fn report() {}
