//! Blocking HTTP responder for OpenAI-style chat completion endpoints.

use std::time::{Duration, Instant};

use serde::Deserialize;

use super::{ChatRequest, ChatResponse, ClientError, Responder, TokenUsage};

/// Connection settings for [`HttpResponder`].
#[derive(Debug, Clone, PartialEq)]
pub struct HttpConfig {
    pub endpoint: String,
    /// Environment variable holding the bearer token.
    pub api_key_env: String,
    /// Direct token override; wins over the environment lookup.
    pub api_key: Option<String>,
    /// Extra attempts after the first request.
    pub max_retries: u32,
    /// First retry delay; doubles per retry up to `max_backoff_ms`.
    pub backoff_ms: u64,
    pub max_backoff_ms: u64,
    pub timeout_secs: u64,
}

impl HttpConfig {
    pub fn new(endpoint: impl Into<String>) -> Self {
        HttpConfig {
            endpoint: endpoint.into(),
            api_key_env: "LAYERLAB_API_KEY".into(),
            api_key: None,
            max_retries: 3,
            backoff_ms: 500,
            max_backoff_ms: 8_000,
            timeout_secs: 60,
        }
    }
}

/// POSTs chat requests and retries transient failures with exponential
/// backoff. Rate limits (429) and server errors are retried; other
/// client errors fail immediately.
#[derive(Debug)]
pub struct HttpResponder {
    config: HttpConfig,
    token: String,
    client: reqwest::blocking::Client,
}

#[derive(Deserialize)]
struct WireResponse {
    choices: Vec<WireChoice>,
    #[serde(default)]
    usage: Option<WireUsage>,
}

#[derive(Deserialize)]
struct WireChoice {
    message: WireMessage,
    #[serde(default)]
    finish_reason: Option<String>,
}

#[derive(Deserialize)]
struct WireMessage {
    content: String,
}

#[derive(Deserialize, Default)]
struct WireUsage {
    #[serde(default)]
    prompt_tokens: u64,
    #[serde(default)]
    completion_tokens: u64,
}

impl HttpResponder {
    pub fn new(config: HttpConfig) -> Result<Self, ClientError> {
        let token = match &config.api_key {
            Some(key) => key.clone(),
            None => std::env::var(&config.api_key_env).map_err(|_| {
                ClientError::MissingApiKey {
                    env: config.api_key_env.clone(),
                }
            })?,
        };
        let client = reqwest::blocking::Client::builder()
            .timeout(Duration::from_secs(config.timeout_secs))
            .build()
            .map_err(|e| ClientError::Transport(e.to_string()))?;
        Ok(HttpResponder {
            config,
            token,
            client,
        })
    }

    fn attempt(&self, request: &ChatRequest) -> Result<ChatResponse, ClientError> {
        let started = Instant::now();
        let response = self
            .client
            .post(&self.config.endpoint)
            .bearer_auth(&self.token)
            .json(request)
            .send()
            .map_err(|e| ClientError::Transport(e.to_string()))?;
        let status = response.status();
        let body = response
            .text()
            .map_err(|e| ClientError::Transport(e.to_string()))?;
        if status.as_u16() == 429 {
            return Err(ClientError::RateLimited);
        }
        if !status.is_success() {
            return Err(ClientError::Http {
                status: status.as_u16(),
                body: truncate(&body, 400),
            });
        }
        let wire: WireResponse = serde_json::from_str(&body)
            .map_err(|e| ClientError::Transport(format!("bad response body: {e}")))?;
        let choice = wire
            .choices
            .into_iter()
            .next()
            .ok_or_else(|| ClientError::Transport("response has no choices".into()))?;
        let usage = wire.usage.unwrap_or_default();
        Ok(ChatResponse {
            content: choice.message.content,
            finish_reason: choice.finish_reason.unwrap_or_else(|| "stop".into()),
            usage: TokenUsage {
                prompt_tokens: usage.prompt_tokens,
                completion_tokens: usage.completion_tokens,
            },
            latency_ms: started.elapsed().as_millis() as u64,
        })
    }

    fn retryable(error: &ClientError) -> bool {
        match error {
            ClientError::RateLimited | ClientError::Transport(_) => true,
            ClientError::Http { status, .. } => *status >= 500,
            _ => false,
        }
    }
}

impl Responder for HttpResponder {
    fn complete(&self, request: &ChatRequest) -> Result<ChatResponse, ClientError> {
        let attempts = self.config.max_retries + 1;
        let mut delay = self.config.backoff_ms;
        let mut last = None;
        for attempt in 0..attempts {
            match self.attempt(request) {
                Ok(response) => return Ok(response),
                Err(error) => {
                    let retry = Self::retryable(&error) && attempt + 1 < attempts;
                    if !retry {
                        return if attempt == 0 {
                            Err(error)
                        } else {
                            Err(ClientError::ExhaustedRetries {
                                attempts: attempt + 1,
                                last: Box::new(error),
                            })
                        };
                    }
                    last = Some(error);
                    std::thread::sleep(Duration::from_millis(delay));
                    delay = (delay * 2).min(self.config.max_backoff_ms);
                }
            }
        }
        Err(ClientError::ExhaustedRetries {
            attempts,
            last: Box::new(last.unwrap_or(ClientError::Transport("no attempt ran".into()))),
        })
    }

    fn kind_name(&self) -> &'static str {
        "http"
    }
}

fn truncate(text: &str, limit: usize) -> String {
    if text.chars().count() <= limit {
        text.to_string()
    } else {
        let cut: String = text.chars().take(limit).collect();
        format!("{cut}…")
    }
}
