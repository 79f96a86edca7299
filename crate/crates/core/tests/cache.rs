//! Disk cache: results never depend on whether, or what, was cached.

use daha_wheel::macdonald::{e_by_route, e_specialized, set_disk_cache, DiskCache, Route};
use daha_wheel::scalars::ParamSpec;

#[test]
fn cached_values_match_fresh_ones() {
    let dir = tempfile::tempdir().unwrap();
    let cache = DiskCache::new(dir.path());
    let p = ParamSpec::new(3, 1, 2).unwrap();
    let lam = [1, -1, 2];

    set_disk_cache(None);
    let fresh = e_specialized(&lam, &p).unwrap();
    let generic = e_by_route(&lam, Route::Intertwiners).unwrap();

    set_disk_cache(Some(cache.clone()));
    assert_eq!(e_specialized(&lam, &p).unwrap(), fresh);
    let spec_file = cache.spec_path_for(&lam, &p);
    assert!(spec_file.exists());
    assert_eq!(cache.load_spec(&lam, &p).unwrap(), fresh);

    cache.store(&lam, &generic).unwrap();
    assert_eq!(cache.load(&lam).unwrap(), generic);

    // a damaged entry is ignored, not trusted
    std::fs::write(&spec_file, "{\"poly\": 1}").unwrap();
    assert!(cache.load_spec(&lam, &p).is_none());
    assert_eq!(e_specialized(&lam, &p).unwrap(), fresh);

    // so is a missing one
    std::fs::remove_dir_all(dir.path()).unwrap();
    assert_eq!(e_specialized(&lam, &p).unwrap(), fresh);
    set_disk_cache(None);
}
