#ifndef HIDESEEK_VERSION_H_
#define HIDESEEK_VERSION_H_

namespace hideseek {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hideseek

#endif  // HIDESEEK_VERSION_H_
