import { ApiClient } from './api.js'
import { apiBase } from './config.js'
import { App } from './views.js'

const root = document.getElementById('app')
if (root) {
  const app = new App(root, new ApiClient(apiBase()))
  void app.start()
}
