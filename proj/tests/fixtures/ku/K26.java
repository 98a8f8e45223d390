package ku;

import javax.faces.context.FacesContext;

class K26 {
  FacesContext context() {
    return FacesContext.getCurrentInstance();
  }
}
