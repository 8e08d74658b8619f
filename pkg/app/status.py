"""
Коды завершения процесса

0: Успех - команда выполнена, отчет выведен
1: Нарушение - проверка теоремы или инварианта нашла контрпример (ошибка реализации)
2: Ошибка валидации - входные структуры не проходят проверку аксиом или не разрешаются
3: Переполнение - превышено одно из ограничений перебора
70: Непредвиденная ошибка (EX_SOFTWARE)
"""

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_VALIDATION_ERROR = 2
EXIT_CAPACITY_ERROR = 3
EXIT_UNEXPECTED_ERROR = 70
