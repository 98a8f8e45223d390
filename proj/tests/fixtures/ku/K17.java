package ku;

import java.sql.Connection;
import java.sql.DriverManager;
import java.sql.SQLException;

class K17 {
  Connection open(String url) throws SQLException {
    return DriverManager.getConnection(url);
  }
}
