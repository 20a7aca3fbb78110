//! Plain-text `key = value` run configuration.
//!
//! ```text
//! h2 = 16
//! v = 2,1,3
//! rays = 1/4, 3/4
//! rank_bound = 50
//! annotations = genus9.annotations
//! out = out
//! scale = 1024
//! ```
//!
//! `#` starts a comment. Only `h2` and `v` are required.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lattice::{square, K3Config, MukaiVector};
use crate::rational::{parse_rat, Rat};

pub const DEFAULT_RANK_BOUND: u64 = 50;
pub const DEFAULT_SCALE: u64 = 1024;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub h2: i64,
    pub v: MukaiVector,
    /// `None` selects the default rays `μ ± sqrt(Q)`.
    pub rays: Option<Vec<Rat>>,
    pub rank_bound: u64,
    pub annotations: Option<String>,
    pub out: Option<String>,
    pub scale: u64,
}

impl RunConfig {
    pub fn new(h2: i64, v: MukaiVector) -> Result<Self> {
        let cfg = RunConfig {
            h2,
            v,
            rays: None,
            rank_bound: DEFAULT_RANK_BOUND,
            annotations: None,
            out: None,
            scale: DEFAULT_SCALE,
        };
        cfg.validate(0, 0)?;
        Ok(cfg)
    }

    pub fn k3(&self) -> K3Config {
        K3Config::new(self.h2).expect("validated at parse time")
    }

    fn validate(&self, h2_line: usize, v_line: usize) -> Result<()> {
        let k3 = K3Config::new(self.h2).map_err(|e| Error::Config { line: h2_line, message: e.to_string() })?;
        let bad_v = |message: String| Error::Config { line: v_line, message };
        if !self.v.is_primitive() {
            return Err(bad_v(format!("v = {} is not primitive", self.v.triple())));
        }
        if self.v.r <= 0.into() {
            return Err(bad_v(format!("v = {} must have positive rank", self.v.triple())));
        }
        let v2 = square(&k3, &self.v);
        if v2 < (-2).into() {
            return Err(bad_v(format!("v^2 = {v2} is below -2")));
        }
        Ok(())
    }

    /// Inverse of [`parse_config`].
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "h2 = {}", self.h2);
        let _ = writeln!(s, "v = {}", self.v.triple());
        if let Some(rays) = &self.rays {
            let list: Vec<String> = rays.iter().map(|r| r.to_string()).collect();
            let _ = writeln!(s, "rays = {}", list.join(", "));
        }
        let _ = writeln!(s, "rank_bound = {}", self.rank_bound);
        if let Some(a) = &self.annotations {
            let _ = writeln!(s, "annotations = {a}");
        }
        if let Some(o) = &self.out {
            let _ = writeln!(s, "out = {o}");
        }
        let _ = writeln!(s, "scale = {}", self.scale);
        s
    }
}

pub fn parse_config(text: &str) -> Result<RunConfig> {
    let mut h2: Option<(i64, usize)> = None;
    let mut v: Option<(MukaiVector, usize)> = None;
    let mut rays = None;
    let mut rank_bound = DEFAULT_RANK_BOUND;
    let mut annotations = None;
    let mut out = None;
    let mut scale = DEFAULT_SCALE;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| Error::Config { line, message };
        let (key, value) =
            content.split_once('=').ok_or_else(|| err(format!("expected key = value, got `{content}`")))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "h2" => h2 = Some((value.parse().map_err(|_| err(format!("h2: not an integer: `{value}`")))?, line)),
            "v" => {
                let parsed =
                    MukaiVector::parse_triple(value).ok_or_else(|| err(format!("v: expected a,b,c, got `{value}`")))?;
                v = Some((parsed, line));
            }
            "rays" if value.is_empty() => rays = Some(Vec::new()),
            "rays" => {
                let list = value
                    .split(',')
                    .map(|p| parse_rat(p.trim()).ok_or_else(|| err(format!("rays: malformed rational `{}`", p.trim()))))
                    .collect::<Result<Vec<_>>>()?;
                rays = Some(list);
            }
            "rank_bound" => {
                rank_bound =
                    value.parse().map_err(|_| err(format!("rank_bound: not a non-negative integer: `{value}`")))?
            }
            "annotations" => annotations = Some(value.to_string()),
            "out" => out = Some(value.to_string()),
            "scale" => {
                scale = value.parse().map_err(|_| err(format!("scale: not a positive integer: `{value}`")))?;
                if scale == 0 {
                    return Err(err("scale must be positive".into()));
                }
            }
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }

    let (h2, h2_line) = h2.ok_or_else(|| Error::MissingKey("h2".into()))?;
    let (v, v_line) = v.ok_or_else(|| Error::MissingKey("v".into()))?;
    let cfg = RunConfig { h2, v, rays, rank_bound, annotations, out, scale };
    cfg.validate(h2_line, v_line)?;
    Ok(cfg)
}
