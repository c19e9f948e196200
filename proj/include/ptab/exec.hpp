#pragma once

namespace ptab {

// Every data-parallel kernel has a serial reference path and an OpenMP
// path. The serial path is the one the tests treat as ground truth.
enum class Exec { serial, parallel };

// Caps the OpenMP worker count; n <= 0 restores the runtime default.
void set_max_threads(int n);
int max_threads();

}  // namespace ptab
