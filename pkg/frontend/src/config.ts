// Build-time API base. Leave empty for same-origin deployments (the
// Python service can serve these assets itself); set before `npm run
// build` to pin a remote API. Runtime overrides (`?api=` query parameter
// or `window.GASTAB_API_BASE`) take precedence either way.
export const BUILD_API_BASE = "";
