use probecut::{Colour, CutCertificate, Graph};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

impl Answer {
    pub fn from_bool(yes: bool) -> Self {
        if yes {
            Answer::Yes
        } else {
            Answer::No
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Answer::Yes => 0,
            Answer::No => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportCertificate {
    /// One `"R"` or `"B"` per vertex.
    pub colouring: Vec<String>,
    pub cut: Vec<(usize, usize)>,
    pub size: usize,
    pub d: usize,
    pub perfect: bool,
}

impl From<&CutCertificate> for ReportCertificate {
    fn from(c: &CutCertificate) -> Self {
        ReportCertificate {
            colouring: c.colouring.iter().map(|col| col.letter().to_string()).collect(),
            cut: c.cut.clone(),
            size: c.size,
            d: c.d,
            perfect: c.perfect,
        }
    }
}

impl ReportCertificate {
    pub fn colours(&self) -> Result<Vec<Colour>> {
        self.colouring.iter().enumerate().map(|(i, s)| colour_from(s, &format!("colouring[{i}]"))).collect()
    }

    /// True iff the colouring is a valid cut of `g` matching every recorded field.
    pub fn revalidates(&self, g: &Graph) -> Result<bool> {
        let colours = self.colours()?;
        if colours.len() != g.n() {
            return Ok(false);
        }
        let checked = probecut::colouring::validate_colouring(
            g,
            &probecut::Colouring::from_total(&colours),
            self.d,
            self.perfect,
        )?;
        Ok(matches!(checked, Ok(c) if c.cut == self.cut && c.size == self.size))
    }
}

pub(crate) fn colour_from(s: &str, location: &str) -> Result<Colour> {
    match s.trim() {
        "R" | "r" | "red" => Ok(Colour::Red),
        "B" | "b" | "blue" => Ok(Colour::Blue),
        other => Err(CliError::parse(location, format!("`{other}` is not a colour (R or B)"))),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub answer: Answer,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<ReportCertificate>,
    /// Why the answer is no, for verification commands.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
    /// An `F` found by search when the instance carried none.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe_certificate: Option<Vec<(usize, usize)>>,
    #[serde(default)]
    pub branches_explored: u64,
    #[serde(default)]
    pub stranded_branches: u64,
    #[serde(default)]
    pub case_trace: Vec<String>,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn new(command: impl Into<String>, answer: Answer) -> Self {
        RunReport {
            command: command.into(),
            answer,
            certificate: None,
            violation: None,
            probe_certificate: None,
            branches_explored: 0,
            stranded_branches: 0,
            case_trace: Vec::new(),
            wall_time_ms: 0.0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialise")
    }
}
