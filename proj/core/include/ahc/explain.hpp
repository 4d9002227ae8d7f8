#pragma once

#include "ahc/certificate.hpp"

#include <string>

namespace ahc {

/// Indented narration of a certificate, one paragraph per distinct node.
/// Nodes reached a second time are cited instead of repeated.
std::string explain(const Certificate& certificate);

}  // namespace ahc
