package spot;

import java.sql.Connection;
import java.sql.SQLException;
import javax.persistence.Entity;
import javax.persistence.EntityManager;
import javax.persistence.Id;

@Entity
class Persistence {
  @Id
  long id;

  int count(Connection c, EntityManager em) throws SQLException {
    em.createQuery("select p from Persistence p");
    return c.createStatement().executeUpdate("delete from t");
  }
}
