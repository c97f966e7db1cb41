#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "driftrec/config.hpp"
#include "driftrec/score_net.hpp"

namespace driftrec {

/// Everything needed to resume training or to restore images.
struct Checkpoint {
  TrainMode mode = TrainMode::kDriftRec;
  SdeParams sde;  // raw parameters; nu is re-derived on load
  ScoreModelParams<float> params;
  ParamSet<float> adam_m;
  ParamSet<float> adam_v;
  std::map<std::string, std::string> metadata;
};

inline constexpr std::uint32_t kCheckpointVersion = 1;

/// Binary layout: magic "DRCKPT\0\0", version, metadata, mode, sde, net spec,
/// step count, then the live, ema, adam_m and adam_v tensor sections.
/// All integers and floats little-endian. Writes to a temporary file first.
void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
/// Throws IoError on a malformed or truncated file.
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace driftrec
