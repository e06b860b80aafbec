import os,json
from typing import Any
"""
Módulo para padronizar acesso a configurações globais do projeto, definidas num arquivo JSON
"""



__SCRIPT_DIR:str = os.path.dirname(os.path.abspath(__file__))
__CONFIG_PATH: str = os.path.join(__SCRIPT_DIR,"coupling_config.json")

__config_dict: dict
try:
   with open(__CONFIG_PATH, "r") as f:
      __config_dict: dict = json.load(f)
except (OSError, json.JSONDecodeError):
   raise RuntimeError("Não foi possível abrir o arquivo de configuração do projeto (coupling_config.json)")

#função para deixar o usuário apenas acessar o valor de uma key de configuração
def get_config(config_name:str)-> Any:
   """
   Função para pegar uma constante do json de configs do projeto (caps de recursos, tolerâncias, formato do CSV...)

   Args:
      config_name (str): nome da constante de config

   Return:
      (Any): valor da constante de configuração
   """
   val:Any = __config_dict.get(config_name)
   if val is not None: #0 é um valor válido (ex: seed padrão)
      return val
   else:
      raise RuntimeError(f"Não foi possível acessar uma configuração com esse nome: {config_name}")

def get_config_or(config_name:str, override:Any)->Any:
   """
   Retorna o override caso ele tenha sido passado (ex: flag da linha de comando), senão o valor da config
   """
   if override is not None:
      return override
   return get_config(config_name)
