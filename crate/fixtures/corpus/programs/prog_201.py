# fixture program 201
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
user = {'name': 'Madrid', 'age': 33, 'city': 'london'}
user['age'] += 1
user = {'name': 'Carol', 'age': 63, 'city': 'london'}
row_index = 294
row_index = row_index + 1
print(sequence_items[row_index % 3])
contact_email = 'dave.ladder@winter.com'
print('mail to', contact_email)
domain = contact_email.split('@')[1]
contact_email = 'frank.window@saddle.com'
ids = [127, 132, 112, 111, 130, 123, 102, 108, 131, 107]
print(len(ids))
for element in ids:
    print(element)
account_balance = decimal.Decimal('6085.4')
print('balance', account_balance)
account_balance = decimal.Decimal('4271.21')
payload = 'Ocean bridge winter'.encode()
decoded = payload.decode()
model_dir = pathlib.Path('out/matrix')
print(model_dir.name)
target_file = model_dir / 'out.csv'
epsilon = 0.9
print('lr', epsilon)
step_value = epsilon * 0.5
duration = 51.745
print('took %.2fs' % duration)
minutes = duration / 60
pairs = [('tunnel', 95), ('window', 57), ('cloud', 5)]
for element in pairs:
    print(element[0])
print(len(pairs))
for loop_round in range(2):
    num_iterations = 50
    print(num_iterations)
