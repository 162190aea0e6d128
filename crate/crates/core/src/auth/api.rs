//! HTTP/JSON front end for [`AuthService`].
//!
//! | method | path | body | success |
//! |---|---|---|---|
//! | POST | `/api/accounts` | [`CreateAccountRequest`] | 201 [`ProfileSummary`] |
//! | GET | `/api/accounts/{username}/challenge` | | 200 [`ChallengeResponse`] |
//! | POST | `/api/accounts/{username}/login` | [`LoginRequest`] | 200 `MatchResult` |
//! | PUT | `/api/accounts/{username}/threshold` | [`ThresholdRequest`] | 200 [`ProfileSummary`] |
//!
//! Errors come back as `{"error": "..."}` with 400, 404 or 409.

use std::sync::Arc;

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post, put};
use axum::{Json, Router};
use base64::engine::general_purpose::STANDARD as BASE64;
use base64::Engine;
use serde::{Deserialize, Serialize};

use super::{AuthError, AuthService, ProfileSummary};
use crate::gesture::Gesture;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CreateAccountRequest {
    pub username: String,
    pub threshold: f64,
    pub image_base64: String,
    pub image_width: u32,
    pub image_height: u32,
    pub gesture: Gesture,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChallengeResponse {
    pub image_id: String,
    pub image_base64: String,
    pub image_width: u32,
    pub image_height: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LoginRequest {
    pub gesture: Gesture,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ThresholdRequest {
    pub threshold: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ErrorBody {
    pub error: String,
}

pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl From<AuthError> for ApiError {
    fn from(e: AuthError) -> Self {
        let status = match &e {
            AuthError::DuplicateUsername(_) => StatusCode::CONFLICT,
            AuthError::UnknownUser(_) => StatusCode::NOT_FOUND,
            AuthError::InvalidUsername(_)
            | AuthError::InvalidGesture(_)
            | AuthError::InvalidThreshold(_)
            | AuthError::InvalidImage(_) => StatusCode::BAD_REQUEST,
            AuthError::Matching(_) | AuthError::StorageFailure(_) => {
                StatusCode::INTERNAL_SERVER_ERROR
            }
        };
        ApiError {
            status,
            message: e.to_string(),
        }
    }
}

impl From<JsonRejection> for ApiError {
    fn from(e: JsonRejection) -> Self {
        ApiError {
            status: StatusCode::BAD_REQUEST,
            message: e.body_text(),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (
            self.status,
            Json(ErrorBody {
                error: self.message,
            }),
        )
            .into_response()
    }
}

type Shared = Arc<AuthService>;

pub fn router(service: Arc<AuthService>) -> Router {
    Router::new()
        .route("/api/accounts", post(create_account))
        .route("/api/accounts/{username}/challenge", get(challenge))
        .route("/api/accounts/{username}/login", post(login))
        .route("/api/accounts/{username}/threshold", put(set_threshold))
        .with_state(service)
}

async fn blocking<T, F>(service: Shared, f: F) -> Result<T, ApiError>
where
    T: Send + 'static,
    F: FnOnce(&AuthService) -> Result<T, AuthError> + Send + 'static,
{
    tokio::task::spawn_blocking(move || f(&service))
        .await
        .map_err(|e| ApiError::from(AuthError::storage(e)))?
        .map_err(ApiError::from)
}

async fn create_account(
    State(service): State<Shared>,
    body: Result<Json<CreateAccountRequest>, JsonRejection>,
) -> Result<(StatusCode, Json<ProfileSummary>), ApiError> {
    let Json(req) = body?;
    let image = BASE64
        .decode(req.image_base64.as_bytes())
        .map_err(|e| ApiError::from(AuthError::InvalidImage(e.to_string())))?;
    let profile = blocking(service, move |svc| {
        svc.create_account(
            &req.username,
            &image,
            req.image_width,
            req.image_height,
            &req.gesture,
            req.threshold,
        )
    })
    .await?;
    Ok((StatusCode::CREATED, Json(ProfileSummary::from(&profile))))
}

async fn challenge(
    State(service): State<Shared>,
    Path(username): Path<String>,
) -> Result<Json<ChallengeResponse>, ApiError> {
    let c = blocking(service, move |svc| svc.get_challenge(&username)).await?;
    Ok(Json(ChallengeResponse {
        image_id: c.image_id,
        image_base64: BASE64.encode(&c.image_bytes),
        image_width: c.image_width,
        image_height: c.image_height,
    }))
}

async fn login(
    State(service): State<Shared>,
    Path(username): Path<String>,
    body: Result<Json<LoginRequest>, JsonRejection>,
) -> Result<Response, ApiError> {
    let Json(req) = body?;
    let result = blocking(service, move |svc| {
        svc.verify_login(&username, &req.gesture)
    })
    .await?;
    Ok(Json(result).into_response())
}

async fn set_threshold(
    State(service): State<Shared>,
    Path(username): Path<String>,
    body: Result<Json<ThresholdRequest>, JsonRejection>,
) -> Result<Json<ProfileSummary>, ApiError> {
    let Json(req) = body?;
    let profile = blocking(service, move |svc| {
        svc.set_threshold(&username, req.threshold)
    })
    .await?;
    Ok(Json(ProfileSummary::from(&profile)))
}

/// Binds `addr` and serves the API until the process is stopped.
pub async fn serve(service: Arc<AuthService>, addr: &str) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(service)).await
}
