#ifndef FERMAT_VERSION_HPP
#define FERMAT_VERSION_HPP

namespace fermat {

inline constexpr const char* kVersion = "1.0.0";

} // namespace fermat

#endif
