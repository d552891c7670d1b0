#ifndef COSETS_VERSION_HPP_
#define COSETS_VERSION_HPP_

namespace cosets {

inline constexpr const char* kToolName = "cosets";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace cosets

#endif
