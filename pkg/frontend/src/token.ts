// Browser-local token storage. The token is only ever sent in the
// Authorization header to the registry; it never appears in URLs.

const TOKEN_KEY = 'ptcatalog.token'

export function loadToken(): string | null {
  return localStorage.getItem(TOKEN_KEY)
}

export function saveToken(token: string) {
  localStorage.setItem(TOKEN_KEY, token)
}

export function clearToken() {
  localStorage.removeItem(TOKEN_KEY)
}
