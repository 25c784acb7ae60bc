// Copy to config.js to point the UI at a registry on another origin.
// Without it the UI talks to the origin it was served from.
window.PTCATALOG_API_BASE = 'http://127.0.0.1:8000'
