//! Enrollment and login against a throwaway on-disk profile store, without
//! the HTTP layer.
//!
//! `cargo run --example auth_service`

use gesturelock::auth::{AuthService, ProfileStore};
use gesturelock::fixtures::leaning_pair;
use gesturelock::MatchConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = tempfile::tempdir()?;
    let service = AuthService::new(ProfileStore::open(dir.path())?, MatchConfig::default())?;

    let (reference, _) = leaning_pair(0.0);
    let profile = service.create_account("alice", b"<png bytes>", 400, 400, &reference, 0.8)?;
    println!(
        "enrolled {} with image {}",
        profile.username, profile.image_id
    );

    let challenge = service.get_challenge("alice")?;
    println!(
        "challenge: {}x{} image, {} bytes",
        challenge.image_width,
        challenge.image_height,
        challenge.image_bytes.len()
    );

    for lean in [3.0, 10.4] {
        let (_, attempt) = leaning_pair(lean);
        let r = service.verify_login("alice", &attempt)?;
        println!(
            "login leaning {lean} px: {}% accepted={}",
            r.percent(),
            r.accepted
        );
    }

    service.set_threshold("alice", 0.7)?;
    let (_, attempt) = leaning_pair(10.4);
    println!(
        "after lowering the threshold to 0.7: accepted={}",
        service.verify_login("alice", &attempt)?.accepted
    );

    match service.create_account("alice", b"", 400, 400, &reference, 0.8) {
        Err(e) => println!("second enrollment: {e}"),
        Ok(_) => unreachable!(),
    }
    println!(
        "{} login attempts recorded",
        service.store().attempts("alice")?.len()
    );
    Ok(())
}
