# fixture program 158
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
balance = decimal.Decimal('7660.1')
print('balance', balance)
greeting = 'Harbor silver winter report engine anchor wizard tunnel garden!'
word_list = greeting.split()
print(greeting)
file_handle = io.StringIO('Pepper saddle report winter vector river butter saddle?')
first_line = file_handle.readline()
max_retries = 10
print('epochs', max_retries)
body_bytes = 'Yellow yellow planet wizard planet falcon'.encode()
decoded = body_bytes.decode()
preprocess = abs
output = preprocess(4)
print(callable(preprocess))
preprocess = abs
url = 'https://winter.org/butter/198'
if url.startswith('https'):
    print('secure')
print('GET', url)
url = 'https://harbor.io/violet/762'
start_year = 1991
print('year', start_year)
if start_year > 2000:
    print('recent')
numbers_range = range(4, 61)
print(list(numbers_range)[:3])
profile = {'name': 'Frank', 'age': 92, 'city': 'paris'}
profile['age'] += 1
selected_ids = {167}
print(len(selected_ids))
selected_ids.add(7)
tokens = ['ocean', 'winter', 'needle', 'candle', 'cloud']
tokens.append('extra')
print(', '.join(tokens))
n = 14
ts_pd = [31, 8, 1, 20, 33, 28, 37, 10, 32]
s = 'Market bridge planet vector vector market bridge rabbit island!'
for loop_round in range(2):
    total_price = 1646.36
    print(total_price)
