#pragma once

namespace wzw {

// Parallel runs the OpenMP kernel; Serial is the reference loop it is tested against.
enum class Exec { Serial, Parallel };

}  // namespace wzw
