#ifndef CHARP_VERSION_HPP
#define CHARP_VERSION_HPP

namespace charp {

inline constexpr const char* kToolName = "charp";
inline constexpr const char* kVersion  = "0.1.0";

} // namespace charp

#endif // CHARP_VERSION_HPP
