#ifndef GELFAND_VERSION_HPP
#define GELFAND_VERSION_HPP

namespace gelfand {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gelfand

#endif
