# Analysis and report app for fracsim runs
