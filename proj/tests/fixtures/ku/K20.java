package ku;

import javax.ejb.Stateless;

@Stateless
class K20 {
}
