//! Enrollment and login on top of the profile store.
//!
//! Reference gestures are kept in cleartext JSON and the matching degree is
//! returned to the caller even on a failed login. Both are deliberate for
//! this service and make it unsuitable as-is for protecting anything real.
//! There is no rate limiting or lockout either.

pub mod api;
pub mod store;

use chrono::Utc;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gesture::{rescale, validate, Gesture, GestureError};
use crate::matcher::{is_valid_threshold, match_gestures, MatchConfig, MatchError, MatchResult};

pub use store::{LoginAttempt, ProfileStore, UserProfile};

#[derive(Debug, Error)]
pub enum AuthError {
    #[error("username {0:?} is already taken")]
    DuplicateUsername(String),
    #[error("no account named {0:?}")]
    UnknownUser(String),
    #[error("invalid username {0:?}")]
    InvalidUsername(String),
    #[error("invalid gesture: {0}")]
    InvalidGesture(#[from] GestureError),
    #[error("threshold must lie in [0, 1], got {0}")]
    InvalidThreshold(f64),
    #[error("invalid image: {0}")]
    InvalidImage(String),
    #[error("matching failed: {0}")]
    Matching(MatchError),
    #[error("storage failure: {0}")]
    StorageFailure(String),
}

impl AuthError {
    pub(crate) fn storage(e: impl std::fmt::Display) -> Self {
        AuthError::StorageFailure(e.to_string())
    }
}

impl From<MatchError> for AuthError {
    fn from(e: MatchError) -> Self {
        match e {
            MatchError::Gesture(g) => AuthError::InvalidGesture(g),
            other => AuthError::Matching(other),
        }
    }
}

/// What enrollment and threshold updates report back. Never carries the gesture.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileSummary {
    pub username: String,
    pub threshold: f64,
    pub image_id: String,
    pub image_width: u32,
    pub image_height: u32,
    pub created_at: chrono::DateTime<Utc>,
}

impl From<&UserProfile> for ProfileSummary {
    fn from(p: &UserProfile) -> Self {
        ProfileSummary {
            username: p.username.clone(),
            threshold: p.threshold,
            image_id: p.image_id.clone(),
            image_width: p.image_width,
            image_height: p.image_height,
            created_at: p.created_at,
        }
    }
}

/// The image a user draws over at login.
#[derive(Debug, Clone, PartialEq)]
pub struct Challenge {
    pub image_id: String,
    pub image_bytes: Vec<u8>,
    pub image_width: u32,
    pub image_height: u32,
}

#[derive(Debug)]
pub struct AuthService {
    store: ProfileStore,
    config: MatchConfig,
}

impl AuthService {
    /// `config.threshold` is ignored; each profile carries its own.
    pub fn new(store: ProfileStore, config: MatchConfig) -> Result<Self, AuthError> {
        config.validate()?;
        Ok(AuthService { store, config })
    }

    pub fn store(&self) -> &ProfileStore {
        &self.store
    }

    pub fn config(&self) -> &MatchConfig {
        &self.config
    }

    /// Enrolls a user. The gesture is mapped onto the image dimensions if it
    /// was captured on a canvas of a different size.
    pub fn create_account(
        &self,
        username: &str,
        image_bytes: &[u8],
        image_width: u32,
        image_height: u32,
        gesture: &Gesture,
        threshold: f64,
    ) -> Result<UserProfile, AuthError> {
        store::validate_username(username)?;
        if !is_valid_threshold(threshold) {
            return Err(AuthError::InvalidThreshold(threshold));
        }
        if image_width == 0 || image_height == 0 {
            return Err(AuthError::InvalidImage(
                "image dimensions must be positive".into(),
            ));
        }
        validate(gesture)?;
        let reference_gesture = rescale(gesture, image_width, image_height)?;
        let profile = UserProfile {
            username: username.to_string(),
            reference_gesture,
            threshold,
            image_id: uuid::Uuid::new_v4().to_string(),
            image_width,
            image_height,
            created_at: Utc::now(),
        };
        self.store.create(&profile, image_bytes)?;
        Ok(profile)
    }

    pub fn get_challenge(&self, username: &str) -> Result<Challenge, AuthError> {
        let profile = self.store.load(username)?;
        let image_bytes = self.store.load_image(username)?;
        Ok(Challenge {
            image_id: profile.image_id,
            image_bytes,
            image_width: profile.image_width,
            image_height: profile.image_height,
        })
    }

    /// Scores a login drawing against the stored reference and logs the attempt.
    pub fn verify_login(
        &self,
        username: &str,
        candidate: &Gesture,
    ) -> Result<MatchResult, AuthError> {
        let profile = self.store.load(username)?;
        validate(candidate)?;
        let config = self.config.with_threshold(profile.threshold);
        let result = match_gestures(&profile.reference_gesture, candidate, &config)?;
        self.store.record_attempt(&LoginAttempt {
            username: profile.username,
            candidate_gesture: candidate.clone(),
            result: result.clone(),
            attempted_at: Utc::now(),
        })?;
        Ok(result)
    }

    pub fn set_threshold(&self, username: &str, threshold: f64) -> Result<UserProfile, AuthError> {
        if !is_valid_threshold(threshold) {
            // unknown users still get UnknownUser
            self.store.load(username)?;
            return Err(AuthError::InvalidThreshold(threshold));
        }
        self.store.update(username, |p| {
            p.threshold = threshold;
            Ok(())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::leaning_pair;

    fn service() -> (tempfile::TempDir, AuthService) {
        let dir = tempfile::tempdir().unwrap();
        let store = ProfileStore::open(dir.path()).unwrap();
        (
            dir,
            AuthService::new(store, MatchConfig::default()).unwrap(),
        )
    }

    fn enroll(svc: &AuthService, name: &str, g: &Gesture, threshold: f64) -> UserProfile {
        svc.create_account(name, b"img", g.canvas_width, g.canvas_height, g, threshold)
            .unwrap()
    }

    #[test]
    fn enroll_stores_threshold() {
        let (_d, svc) = service();
        let (reference, _) = leaning_pair(0.0);
        let p = enroll(&svc, "alice", &reference, 0.8);
        assert_eq!(p.threshold, 0.8);
        assert_eq!(svc.store().load("alice").unwrap(), p);
    }

    #[test]
    fn enroll_errors() {
        let (_d, svc) = service();
        let (reference, _) = leaning_pair(0.0);
        enroll(&svc, "alice", &reference, 0.8);
        assert!(matches!(
            svc.create_account("alice", b"", 400, 400, &reference, 0.8),
            Err(AuthError::DuplicateUsername(_))
        ));
        assert!(matches!(
            svc.create_account("bob", b"", 400, 400, &reference, 1.5),
            Err(AuthError::InvalidThreshold(_))
        ));
        let empty = Gesture::new(400, 400, vec![]);
        assert!(matches!(
            svc.create_account("bob", b"", 400, 400, &empty, 0.5),
            Err(AuthError::InvalidGesture(GestureError::EmptyGesture))
        ));
    }

    #[test]
    fn enrollment_rescales_to_image() {
        let (_d, svc) = service();
        let g = Gesture::from_xy(200, 200, &[(100.0, 100.0), (150.0, 150.0)]);
        let p = svc.create_account("dora", b"", 400, 400, &g, 0.8).unwrap();
        assert_eq!(p.reference_gesture.canvas_width, 400);
        assert_eq!(p.reference_gesture.strokes[0][1].x, 300.0);
    }

    #[test]
    fn login_outcomes() {
        let (_d, svc) = service();
        let (reference, leaning) = leaning_pair(10.4);
        enroll(&svc, "alice", &reference, 0.8);

        let same = svc.verify_login("alice", &reference).unwrap();
        assert_eq!(same.degree, 1.0);
        assert!(same.accepted);

        let off = svc.verify_login("alice", &leaning).unwrap();
        assert_eq!(off.percent(), 74);
        assert!(!off.accepted);

        // a threshold equal to the degree accepts
        svc.set_threshold("alice", off.degree).unwrap();
        assert!(svc.verify_login("alice", &leaning).unwrap().accepted);

        assert_eq!(svc.store().attempts("alice").unwrap().len(), 3);
        assert!(matches!(
            svc.verify_login("zed", &reference),
            Err(AuthError::UnknownUser(_))
        ));
    }

    #[test]
    fn threshold_updates() {
        let (_d, svc) = service();
        let (reference, leaning) = leaning_pair(6.0);
        enroll(&svc, "alice", &reference, 0.8);
        assert!(svc.verify_login("alice", &leaning).unwrap().accepted);
        svc.set_threshold("alice", 0.9).unwrap();
        assert!(!svc.verify_login("alice", &leaning).unwrap().accepted);
        assert!(matches!(
            svc.set_threshold("alice", -0.1),
            Err(AuthError::InvalidThreshold(_))
        ));
        assert!(matches!(
            svc.set_threshold("nobody", 0.5),
            Err(AuthError::UnknownUser(_))
        ));
    }

    #[test]
    fn login_leaves_profile_untouched() {
        let (_d, svc) = service();
        let (reference, leaning) = leaning_pair(3.0);
        enroll(&svc, "alice", &reference, 0.8);
        let before = std::fs::read(svc.store().profile_path("alice")).unwrap();
        svc.verify_login("alice", &leaning).unwrap();
        assert_eq!(
            std::fs::read(svc.store().profile_path("alice")).unwrap(),
            before
        );
    }

    #[test]
    fn challenge_returns_image() {
        let (_d, svc) = service();
        let (reference, _) = leaning_pair(0.0);
        let p = enroll(&svc, "alice", &reference, 0.8);
        let c = svc.get_challenge("alice").unwrap();
        assert_eq!(c.image_id, p.image_id);
        assert_eq!(c.image_bytes, b"img");
        assert_eq!((c.image_width, c.image_height), (400, 400));
        assert!(matches!(
            svc.get_challenge("nobody"),
            Err(AuthError::UnknownUser(_))
        ));
    }
}
