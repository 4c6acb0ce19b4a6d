use crate::commands::CliError;

pub const DEFAULT_SYT_CUTOFF: u32 = plucker::partitions::SYT_CUTOFF;
pub const MAX_SYT_CUTOFF: u32 = 14;
pub const DEFAULT_MAX_WEIGHT: u32 = 20;
pub const MAX_MAX_WEIGHT: u32 = 20;

/// Safety limits on input size; both are user-adjustable up to a hard ceiling.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub syt_cutoff: u32,
    pub max_weight: u32,
}

impl Limits {
    pub fn new(syt_cutoff: u32, max_weight: u32) -> Result<Self, CliError> {
        if syt_cutoff > MAX_SYT_CUTOFF {
            return Err(CliError::Refused(format!(
                "tableau cutoff {syt_cutoff} exceeds the hard limit {MAX_SYT_CUTOFF}"
            )));
        }
        if max_weight > MAX_MAX_WEIGHT {
            return Err(CliError::Refused(format!(
                "weight limit {max_weight} exceeds the hard limit {MAX_MAX_WEIGHT}"
            )));
        }
        Ok(Limits {
            syt_cutoff,
            max_weight,
        })
    }

    pub fn check_weight(&self, weight: u32, what: &str) -> Result<(), CliError> {
        if weight > self.max_weight {
            return Err(CliError::Refused(format!(
                "{what} has weight {weight}, above the limit {} (set --max-weight or PLUCKER_MAX_WEIGHT, at most {MAX_MAX_WEIGHT})",
                self.max_weight
            )));
        }
        Ok(())
    }

    pub fn check_syt(&self, weight: u32) -> Result<(), CliError> {
        if weight > self.syt_cutoff {
            return Err(CliError::Refused(format!(
                "brute-force tableau count at weight {weight} is above the cutoff {} (set --syt-cutoff or PLUCKER_SYT_CUTOFF, at most {MAX_SYT_CUTOFF})",
                self.syt_cutoff
            )));
        }
        Ok(())
    }
}
