use std::time::Duration;

use crate::cache::Cache;
use crate::fixtures::fixture;
use crate::{OeisEntry, OeisError, OeisId, Result};

pub const DEFAULT_BASE_URL: &str = "https://oeis.org";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Cache, then the OEIS host; a successful download is written to the cache.
    Online,
    /// Cache, then the shipped fixtures; never touches the network.
    Offline,
}

/// Where an entry's text came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Cache,
    Network,
    Fixture,
}

#[derive(Debug, Clone)]
pub struct Client {
    cache: Cache,
    mode: Mode,
    base_url: String,
    timeout: Duration,
}

impl Client {
    pub fn new(cache: Cache, mode: Mode) -> Self {
        Self {
            cache,
            mode,
            base_url: DEFAULT_BASE_URL.to_string(),
            timeout: Duration::from_secs(20),
        }
    }

    pub fn with_base_url(mut self, url: impl Into<String>) -> Self {
        self.base_url = url.into();
        self
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = timeout;
        self
    }

    pub fn cache(&self) -> &Cache {
        &self.cache
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Validates `id` before any I/O, then fetches the entry.
    pub fn fetch(&self, id: &str) -> Result<OeisEntry> {
        self.fetch_entry(id.parse()?)
    }

    pub fn fetch_entry(&self, id: OeisId) -> Result<OeisEntry> {
        self.fetch_with_source(id).map(|(entry, _)| entry)
    }

    pub fn fetch_with_source(&self, id: OeisId) -> Result<(OeisEntry, Source)> {
        if let Some(text) = self.cache.load(id)? {
            return Ok((OeisEntry::from_bfile(id, &text)?, Source::Cache));
        }
        match self.mode {
            Mode::Offline => match fixture(id) {
                Some(text) => Ok((OeisEntry::from_bfile(id, text)?, Source::Fixture)),
                None => Err(OeisError::Unavailable {
                    id: id.to_string(),
                    reason: "offline, not cached and no shipped fixture".into(),
                }),
            },
            Mode::Online => {
                let text = self.download(id)?;
                // parse before caching so a bad download is never stored
                let entry = OeisEntry::from_bfile(id, &text)?;
                self.cache.store(id, &text)?;
                Ok((entry, Source::Network))
            }
        }
    }

    fn download(&self, id: OeisId) -> Result<String> {
        let unavailable = |reason: String| OeisError::Unavailable {
            id: id.to_string(),
            reason,
        };
        let url = format!("{}/{}", self.base_url.trim_end_matches('/'), id.bfile_name());
        let client = reqwest::blocking::Client::builder()
            .timeout(self.timeout)
            .build()
            .map_err(|e| unavailable(format!("HTTP client: {e}")))?;
        let response = client
            .get(&url)
            .send()
            .map_err(|e| unavailable(format!("GET {url}: {e}")))?;
        if !response.status().is_success() {
            return Err(unavailable(format!("GET {url}: status {}", response.status())));
        }
        response.text().map_err(|e| unavailable(format!("GET {url}: {e}")))
    }
}
