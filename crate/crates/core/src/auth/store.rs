//! Directory-per-user profile store.
//!
//! Layout under the store root:
//!
//! ```text
//! profiles/<username>/profile.json
//! profiles/<username>/image.bin
//! profiles/<username>/attempts.jsonl
//! ```
//!
//! Every file replacement goes through a temp file in the same directory
//! followed by a rename. Writers are serialized by one lock; readers take no
//! lock and always see either the old or the new file.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};
use tempfile::NamedTempFile;

use super::AuthError;
use crate::gesture::Gesture;
use crate::matcher::MatchResult;

const PROFILE_FILE: &str = "profile.json";
const IMAGE_FILE: &str = "image.bin";
const ATTEMPTS_FILE: &str = "attempts.jsonl";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UserProfile {
    pub username: String,
    pub reference_gesture: Gesture,
    pub threshold: f64,
    pub image_id: String,
    pub image_width: u32,
    pub image_height: u32,
    pub created_at: DateTime<Utc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LoginAttempt {
    pub username: String,
    pub candidate_gesture: Gesture,
    pub result: MatchResult,
    pub attempted_at: DateTime<Utc>,
}

/// Usernames double as directory names, so they are kept to a safe alphabet.
pub fn validate_username(username: &str) -> Result<(), AuthError> {
    let ok = !username.is_empty()
        && username.len() <= 64
        && !username.starts_with('.')
        && username
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'));
    if ok {
        Ok(())
    } else {
        Err(AuthError::InvalidUsername(username.to_string()))
    }
}

pub fn encode_profile(profile: &UserProfile) -> Result<Vec<u8>, AuthError> {
    serde_json::to_vec_pretty(profile).map_err(AuthError::storage)
}

#[derive(Debug)]
pub struct ProfileStore {
    root: PathBuf,
    write_lock: Mutex<()>,
}

impl ProfileStore {
    pub fn open(root: impl Into<PathBuf>) -> Result<Self, AuthError> {
        let root = root.into();
        fs::create_dir_all(root.join("profiles")).map_err(AuthError::storage)?;
        Ok(ProfileStore {
            root,
            write_lock: Mutex::new(()),
        })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn user_dir(&self, username: &str) -> PathBuf {
        self.root.join("profiles").join(username)
    }

    pub fn profile_path(&self, username: &str) -> PathBuf {
        self.user_dir(username).join(PROFILE_FILE)
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, ()> {
        // a panicked writer cannot leave a half-written file behind
        self.write_lock.lock().unwrap_or_else(|e| e.into_inner())
    }

    /// Stores a new profile and its image. Fails if the username is taken.
    pub fn create(&self, profile: &UserProfile, image: &[u8]) -> Result<(), AuthError> {
        validate_username(&profile.username)?;
        let bytes = encode_profile(profile)?;
        let _guard = self.lock();
        let dir = self.user_dir(&profile.username);
        if dir.join(PROFILE_FILE).exists() {
            return Err(AuthError::DuplicateUsername(profile.username.clone()));
        }
        fs::create_dir_all(&dir).map_err(AuthError::storage)?;
        write_atomic(&dir, IMAGE_FILE, image)?;
        // the profile goes last: its presence is what marks the account as existing
        write_atomic(&dir, PROFILE_FILE, &bytes)
    }

    pub fn load(&self, username: &str) -> Result<UserProfile, AuthError> {
        let bytes = self.read_file(username, PROFILE_FILE)?;
        serde_json::from_slice(&bytes).map_err(AuthError::storage)
    }

    pub fn load_image(&self, username: &str) -> Result<Vec<u8>, AuthError> {
        self.read_file(username, IMAGE_FILE)
    }

    fn read_file(&self, username: &str, name: &str) -> Result<Vec<u8>, AuthError> {
        if validate_username(username).is_err() {
            return Err(AuthError::UnknownUser(username.to_string()));
        }
        match fs::read(self.user_dir(username).join(name)) {
            Ok(b) => Ok(b),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                Err(AuthError::UnknownUser(username.to_string()))
            }
            Err(e) => Err(AuthError::storage(e)),
        }
    }

    /// Read-modify-write of one profile under the write lock.
    pub fn update<F>(&self, username: &str, f: F) -> Result<UserProfile, AuthError>
    where
        F: FnOnce(&mut UserProfile) -> Result<(), AuthError>,
    {
        let _guard = self.lock();
        let mut profile = self.load(username)?;
        f(&mut profile)?;
        let bytes = encode_profile(&profile)?;
        write_atomic(&self.user_dir(username), PROFILE_FILE, &bytes)?;
        Ok(profile)
    }

    pub fn record_attempt(&self, attempt: &LoginAttempt) -> Result<(), AuthError> {
        let mut line = serde_json::to_vec(attempt).map_err(AuthError::storage)?;
        line.push(b'\n');
        let _guard = self.lock();
        let path = self.user_dir(&attempt.username).join(ATTEMPTS_FILE);
        let mut file = fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(AuthError::storage)?;
        file.write_all(&line).map_err(AuthError::storage)
    }

    pub fn attempts(&self, username: &str) -> Result<Vec<LoginAttempt>, AuthError> {
        let bytes = match self.read_file(username, ATTEMPTS_FILE) {
            Err(AuthError::UnknownUser(_)) => return Ok(Vec::new()),
            other => other?,
        };
        bytes
            .split(|&b| b == b'\n')
            .filter(|l| !l.is_empty())
            .map(|l| serde_json::from_slice(l).map_err(AuthError::storage))
            .collect()
    }

    pub fn usernames(&self) -> Result<Vec<String>, AuthError> {
        let mut names = Vec::new();
        for entry in fs::read_dir(self.root.join("profiles")).map_err(AuthError::storage)? {
            let entry = entry.map_err(AuthError::storage)?;
            if entry.path().join(PROFILE_FILE).is_file() {
                names.push(entry.file_name().to_string_lossy().into_owned());
            }
        }
        names.sort();
        Ok(names)
    }
}

fn write_atomic(dir: &Path, name: &str, bytes: &[u8]) -> Result<(), AuthError> {
    let mut tmp = NamedTempFile::new_in(dir).map_err(AuthError::storage)?;
    tmp.write_all(bytes).map_err(AuthError::storage)?;
    tmp.as_file().sync_all().map_err(AuthError::storage)?;
    tmp.persist(dir.join(name))
        .map_err(|e| AuthError::storage(e.error))?;
    Ok(())
}
