#include "sliceconf/slice_state.hpp"

namespace sliceconf {

void SliceState::validate() const {
  const Grid& g = A.grid();
  for (const Profile* p :
       {&Theta, &phi, &Sigma, &E, &H, &rho, &this->p, &Pi, &Q, &Omega, &xi})
    require_same_grid(g, p->grid(), "SliceState");
}

SliceState SliceState::zero(const Grid& grid) {
  Profile z = Profile::constant(grid, 0.0);
  return SliceState{z, z, z, z, z, z, z, z, z, z, z, z, 0.0};
}

}  // namespace sliceconf
