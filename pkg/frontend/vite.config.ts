import { defineConfig } from "vite"

// The planner is served by `flightcalc serve --static dist`, possibly from a
// sub-path, so asset URLs must stay relative.  During `vite dev` the API
// calls are proxied to a locally running service instead.
export default defineConfig({
  base: "./",
  build: {
    target: "es2020",
  },
  server: {
    proxy: {
      "/api": "http://127.0.0.1:8424",
    },
  },
})
